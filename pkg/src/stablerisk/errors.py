"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class NumericalError(RuntimeError):
    """An estimation or evaluation step failed numerically."""


class ConfigError(ValueError):
    """Invalid pipeline configuration."""
