"""Exception types shared across the package."""


class CapacityError(Exception):
    """Requested system size exceeds the dense-representation limits."""


class ConfigError(Exception):
    """Invalid or inconsistent experiment configuration."""


class InternalConsistencyError(RuntimeError):
    """A computed quantity violates a bound it must satisfy by construction.

    Raised e.g. when the discord minimisation returns a value below -1e-6,
    which signals a broken entropy evaluation or optimizer rather than an
    invalid input.
    """
