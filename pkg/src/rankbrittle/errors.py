"""Exception types shared across the package."""


class RankBrittleError(Exception):
    """Base class for all package errors."""


class InputError(RankBrittleError):
    """Invalid argument, malformed structure, or violated precondition."""


class FormatError(InputError):
    """Malformed serialized data; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class WitnessError(InputError):
    """A replayed witness step referenced a missing vertex or unknown op."""


class ResourceLimitError(RankBrittleError):
    """A configured solver cap was exceeded; the answer is indeterminate."""
