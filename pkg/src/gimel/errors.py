"""Exception hierarchy shared across the package."""


class GimelError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(GimelError):
    """Input text or data does not conform to the expected grammar/schema."""


class ContextMismatchError(GimelError):
    """Operands live in different ring contexts."""


class UndefinedDegreeError(GimelError):
    """Quantum degree requested for the zero polynomial."""


class DegreeMismatchError(GimelError):
    """Potential degree does not match the ring context."""


class DecompositionError(GimelError):
    """Direct-sum decomposition did not have the expected shape."""


class InvalidRootError(GimelError):
    """The given value is not a simple rational root of the potential."""


class NondegeneracyError(GimelError):
    """A fixture failed a nondegeneracy requirement (e.g. the distinguished
    cohomology class is missing or not unique)."""


class InternalError(GimelError):
    """A self-check failed; indicates a bug, not bad input."""
