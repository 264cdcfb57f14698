"""Unit-disk geometry: chords, boundary nodes, and interior evaluation grids.

The domain is fixed to the closed unit disk.  For a point x inside the disk
and a direction theta = (cos phi, sin phi), the two distances to the boundary
along -theta and +theta solve the quadratic |x + t theta| = 1 in closed form,
so every chord quantity below is exact up to rounding.

Conventions used throughout the package:
    theta       = (cos phi, sin phi)
    theta_perp  = (-sin phi, cos phi)          (theta rotated by +pi/2)
    boundary node j at beta_j = 2 pi j / N_b,  zeta_j = e^{i beta_j}
    d zeta      = i e^{i beta} d beta          (exact in boundary quadratures)
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DomainError

BOUNDARY_ATOL = 1e-12


def unit_vector(phi):
    """theta = (cos phi, sin phi); accepts scalars or arrays."""
    return np.cos(phi), np.sin(phi)


def perp_vector(phi):
    """theta_perp = (-sin phi, cos phi), the global rotation convention."""
    return -np.sin(phi), np.cos(phi)


def chord_times(x, phi):
    """Distances (tau_minus, tau_plus) from x to the unit circle along -/+ theta.

    Solves t^2 + 2 t (x . theta) + |x|^2 - 1 = 0; tau_plus is the positive
    root and tau_minus the negated negative root.  Vectorized over x and phi
    (broadcasting); raises DomainError if any point lies outside the disk.
    """
    x = np.asarray(x, dtype=float)
    px, py = x[..., 0], x[..., 1]
    r2 = px * px + py * py
    if np.any(r2 > 1.0 + 1e-12):
        raise DomainError("point outside the closed unit disk")
    ct, st = unit_vector(phi)
    q = px * ct + py * st
    disc = np.sqrt(np.maximum(q * q + 1.0 - r2, 0.0))
    tau_plus = disc - q
    tau_minus = disc + q
    return np.maximum(tau_minus, 0.0), np.maximum(tau_plus, 0.0)


def chord_endpoints(x, phi):
    """Chord endpoints (x_minus, x_plus) on the unit circle through x along theta."""
    x = np.asarray(x, dtype=float)
    tau_minus, tau_plus = chord_times(x, phi)
    ct, st = unit_vector(phi)
    theta = np.stack(np.broadcast_arrays(ct, st), axis=-1)
    x_minus = x - tau_minus[..., None] * theta
    x_plus = x + tau_plus[..., None] * theta
    return x_minus, x_plus


@dataclass(frozen=True)
class Chord:
    """One chord of the unit disk: base point, direction, boundary distances."""

    x: tuple
    phi: float
    tau_minus: float
    tau_plus: float

    @classmethod
    def through(cls, x, phi):
        tm, tp = chord_times(np.asarray(x, dtype=float), phi)
        return cls(x=(float(x[0]), float(x[1])), phi=float(phi),
                   tau_minus=float(tm), tau_plus=float(tp))

    @property
    def length(self):
        return self.tau_minus + self.tau_plus

    def endpoints(self):
        xm, xp = chord_endpoints(np.asarray(self.x), self.phi)
        return xm, xp


@dataclass(frozen=True)
class DiskDomain:
    """Unit disk with a uniform boundary grid and an interior mask margin.

    n_boundary must be even and >= 8 (the principal-value boundary rule pairs
    nodes with midpoints).  Points with |z| >= 1 - mask_margin are excluded
    from interior grids; the Cauchy-type kernels degrade as z approaches the
    boundary, so evaluation stays on the mask.
    """

    n_boundary: int
    mask_margin: float = 0.05
    radius: float = field(default=1.0, init=False)

    def __post_init__(self):
        if self.n_boundary < 8 or self.n_boundary % 2 != 0:
            raise ConfigError("n_boundary must be even and >= 8")
        if not 0.0 < self.mask_margin < 0.5:
            raise ConfigError("mask_margin must lie in (0, 0.5)")

    @property
    def beta(self):
        """Boundary parameter grid beta_j = 2 pi j / N_b."""
        return 2.0 * np.pi * np.arange(self.n_boundary) / self.n_boundary

    @property
    def zeta(self):
        """Boundary nodes as complex numbers e^{i beta_j}."""
        return np.exp(1j * self.beta)

    @property
    def boundary_xy(self):
        b = self.beta
        return np.cos(b), np.sin(b)

    def interior_grid(self, pitch):
        return InteriorGrid.build(pitch, self.mask_margin)


@dataclass(frozen=True)
class InteriorGrid:
    """Uniform Cartesian lattice restricted to the masked disk |z| < 1 - margin.

    The rectangular lattice indices are retained so finite-difference stencils
    can look up neighbours; `mask` flags lattice sites that are grid nodes and
    `x`, `y` list the node coordinates in lattice scan order.
    """

    pitch: float
    margin: float
    axis: np.ndarray          # 1-d lattice coordinates (shared by both axes)
    mask: np.ndarray          # (n, n) bool
    x: np.ndarray             # (P,) node coordinates
    y: np.ndarray             # (P,)

    @classmethod
    def build(cls, pitch, margin):
        if pitch <= 0:
            raise ConfigError("grid pitch must be positive")
        rmax = 1.0 - margin
        m = int(np.floor(rmax / pitch))
        axis = np.arange(-m, m + 1) * pitch
        X, Y = np.meshgrid(axis, axis, indexing="ij")
        mask = X * X + Y * Y < rmax * rmax
        return cls(pitch=pitch, margin=margin, axis=axis, mask=mask,
                   x=X[mask], y=Y[mask])

    @property
    def n_nodes(self):
        return self.x.size

    @property
    def z(self):
        """Nodes as complex numbers."""
        return self.x + 1j * self.y

    def to_lattice(self, values, fill=np.nan):
        """Scatter a per-node vector onto the (n, n) lattice (fill elsewhere)."""
        out = np.full(self.mask.shape, fill, dtype=np.result_type(values, float))
        out[self.mask] = values
        return out

    def erode(self, rings):
        """Boolean per-node flag: True where `rings` lattice neighbours on each
        side along both axes are also grid nodes (stencil support)."""
        ok = self.mask.copy()
        for _ in range(rings):
            inner = np.zeros_like(ok)
            inner[1:-1, 1:-1] = (ok[1:-1, 1:-1] & ok[:-2, 1:-1] & ok[2:, 1:-1]
                                 & ok[1:-1, :-2] & ok[1:-1, 2:])
            ok = inner
        return ok[self.mask]
