"""Exception hierarchy shared across the library.

ValidationError covers bad user input (CLI exit code 2); ComputationError
covers failures inside an otherwise well-posed job (CLI exit code 3).
"""


class TtowError(Exception):
    pass


class ValidationError(TtowError):
    pass


class ComputationError(TtowError):
    pass


class FieldMismatch(ValidationError):
    pass


class DivisionByZero(ComputationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class VarianceMismatch(ValidationError):
    pass


class OrderMismatch(ValidationError):
    pass


class NotBinomial(ValidationError):
    pass


class InconsistentCharacter(ComputationError):
    pass


class NotMonomial(ValidationError):
    pass


class NotDownwardClosed(ValidationError):
    pass


class InvalidSubframe(ValidationError):
    pass


class NonLinearIdeal(ValidationError):
    pass


class BudgetExceeded(ComputationError):
    pass


class UnsupportedParams(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class NotComposable(ValidationError):
    pass


class CertificationFailed(ComputationError):
    pass


class ZeroTorusEntry(ValidationError):
    pass


class ClosureCheckFailed(ComputationError):
    pass


class SingularMatrix(ComputationError):
    pass
