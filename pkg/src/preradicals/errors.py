"""Exception hierarchy shared by every layer of the package."""


class PreradicalError(Exception):
    """Base class for all library errors."""


class DimensionError(PreradicalError, ValueError):
    """Operands live in incompatible ambient spaces."""


class FieldError(PreradicalError, ValueError):
    """Invalid modulus, or operands over different prime fields."""


class CapacityError(PreradicalError):
    """An enumeration would exceed the configured work bound."""


class IntertwiningError(PreradicalError, ValueError):
    """A family of matrices fails to commute with the arrow maps."""


class InvalidSubrepError(PreradicalError, ValueError):
    """A tuple of subspaces is not closed under the arrow maps."""


class MismatchError(PreradicalError, ValueError):
    """Objects belong to different quivers, fields or categories."""


class UnsupportedShapeError(PreradicalError, ValueError):
    """The quiver is not of the shape an operation supports."""


class NaturalityError(PreradicalError):
    """An operation produced a non-natural subobject table (library bug)."""


class ClosureError(PreradicalError, ValueError):
    """A family of preradicals is not closed under join or meet."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class LabelError(PreradicalError, KeyError):
    """A label could not be resolved against a naming dictionary."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""
