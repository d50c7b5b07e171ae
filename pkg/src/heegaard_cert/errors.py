class InputError(ValueError):
    """Malformed input data (files, matrices, words, diagrams)."""


class ResourceLimitError(RuntimeError):
    """An enumeration cap was exceeded; the answer is unknown, not negative."""
