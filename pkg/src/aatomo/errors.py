"""Exception types shared across the package."""


class AatomoError(Exception):
    """Base class for all package errors."""


class DomainError(AatomoError):
    """A geometric precondition is violated (point outside the disk, etc.)."""


class ConfigError(AatomoError):
    """Inconsistent sizes, truncations, or configuration values."""
