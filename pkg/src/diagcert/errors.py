"""Exception hierarchy shared by all modules.

PreconditionError subclasses signal violated operation contracts (CLI exit
code 2), SearchExhausted signals a capped search that gave up (exit 3) and
InternalDefect signals a broken internal invariant (exit 1).
"""


class ToolkitError(Exception):
    pass


class PreconditionError(ToolkitError):
    pass


class NonCoprimeModuli(PreconditionError):
    pass


class NotInvertibleInRing(PreconditionError):
    pass


class NotPrimitive(PreconditionError):
    pass


class ParameterNotInRing(PreconditionError):
    pass


class ScalarMatrix(PreconditionError):
    pass


class TargetTraceMismatch(PreconditionError):
    pass


class DimensionTooSmall(PreconditionError):
    pass


class IdealNotUnit(PreconditionError):
    pass


class NoUnitOffDiagonal(PreconditionError):
    pass


class MinpolyDegreeNotTwo(PreconditionError):
    pass


class ConstraintUnsatisfiableWithinCap(PreconditionError):
    pass


class SearchExhausted(ToolkitError):
    pass


class InternalDefect(ToolkitError):
    """An invariant the construction guarantees failed anyway."""


class IntegralityViolation(InternalDefect):
    pass


class DecompositionSearchExhausted(InternalDefect):
    pass
