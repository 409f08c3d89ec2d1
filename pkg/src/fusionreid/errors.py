"""Error taxonomy shared across the package.

The CLI maps these onto distinct exit codes (config=2, data=3,
checkpoint=4), so raising the right class is part of the contract.
"""


class FusionReidError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(FusionReidError):
    """Invalid, inconsistent, or unknown configuration."""


class DataError(FusionReidError):
    """Dataset generation or loading failure (missing files, infeasible splits, bad vocabulary...)."""


class CheckpointError(FusionReidError):
    """Checkpoint serialization failure (version, shape, or payload-integrity mismatch)."""


class NumericsError(FusionReidError):
    """Numerical contract violation: shape mismatch, non-finite gradients, diverged loss."""
