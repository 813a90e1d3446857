"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Raised when a requested computation exceeds the desk-scale bounds.

    The message names the bound that was exceeded, so callers (and the CLI)
    can report exactly why the computation was refused.
    """
