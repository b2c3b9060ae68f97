"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Input exceeds a hard size limit of the implementation."""


class FormatError(ValueError):
    """Malformed input text; carries a byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class DisconnectedSeedError(ValueError):
    """Orbit exploration requires a connected seed graph."""
