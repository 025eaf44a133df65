"""Exception taxonomy shared across the package."""


class TagMoeError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(TagMoeError, ValueError):
    """Operand shapes are incompatible for the requested operation."""


class NumericError(TagMoeError, ValueError):
    """Non-finite values where finite ones are required."""


class ContractError(TagMoeError, ValueError):
    """A documented precondition of an operation was violated."""


class ConfigError(TagMoeError, ValueError):
    """Invalid, unknown, or inconsistent configuration."""


class VocabularyError(TagMoeError, KeyError):
    """Unknown tag name or tag id."""


class RegistryError(TagMoeError, KeyError):
    """Unknown task id in the synthetic task registry."""


class FormatError(TagMoeError, ValueError):
    """A serialized file is malformed. Carries the byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset
