"""Exception hierarchy for eqclass.

Every error raised by the library derives from :class:`EqclassError`. The CLI
maps :class:`InputError` subclasses to exit code 2 and every other
:class:`EqclassError` to exit code 1.
"""


class EqclassError(Exception):
    """Base class for all library errors."""

    code = "error"


class InputError(EqclassError):
    """Malformed or inconsistent input data."""

    code = "input_error"


class ComputationError(EqclassError):
    """A well-formed input whose evaluation is undefined."""

    code = "computation_error"


class ConductorMismatch(InputError):
    code = "conductor_mismatch"


class ConductorTooLarge(InputError):
    code = "conductor_too_large"


class InvalidWeights(InputError):
    code = "invalid_weights"


class RingMismatch(InputError):
    code = "ring_mismatch"


class UnknownElement(InputError):
    code = "unknown_element"


class MissingTable(InputError):
    code = "missing_table"


class NonNilpotentArgument(InputError):
    code = "non_nilpotent_argument"


class ThetaZero(InputError):
    code = "theta_zero"


class NonTrivialAngle(InputError):
    """A twisting bundle carries a nonzero angle on some fixed component."""

    code = "non_trivial_angle"


class DivisionByZero(ComputationError, ZeroDivisionError):
    code = "division_by_zero"


class NonUnitConstant(ComputationError):
    code = "non_unit_constant"


class PoleAtMinusOne(ComputationError):
    code = "pole_at_minus_one"


class PoleAtZero(ComputationError):
    code = "pole_at_zero"
