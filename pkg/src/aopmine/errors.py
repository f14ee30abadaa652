"""Error types shared by the I/O-facing modules.

The CLI maps these onto its exit-code contract: configuration problems exit
with 1, data problems with 2.
"""


class ConfigError(ValueError):
    """Invalid flags, parameters, or configuration-file contents."""


class DataError(ValueError):
    """Unusable input data or a failed read/write."""
