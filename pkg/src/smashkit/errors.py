"""Exception taxonomy shared by all smashkit modules."""


class SmashkitError(Exception):
    """Base class for every error raised by smashkit."""


class FieldMismatch(SmashkitError):
    """Operands live over different fields."""


class DivisionByZero(SmashkitError):
    pass


class NoSuchRoot(SmashkitError):
    """No element of the requested multiplicative order exists."""


class ShapeMismatch(SmashkitError):
    """Matrix shapes are incompatible with the declared tensor spaces."""


class DimensionMismatch(SmashkitError):
    pass


class NotABialgebra(SmashkitError):
    pass


class NotAlgebraMap(SmashkitError):
    pass


class NotCoalgebraMap(SmashkitError):
    pass


class ZetaNotBijective(SmashkitError):
    pass


class EtaNotBijective(SmashkitError):
    pass


class CompatibilityFailed(SmashkitError):
    pass


class WitnessInvalid(SmashkitError):
    pass


class AntipodeNotInvertible(SmashkitError):
    pass


class InputsNotBialgebras(SmashkitError):
    pass


class BudgetExceeded(SmashkitError):
    pass


class UnitNotFirstBasisVector(SmashkitError):
    pass


class IndexOutOfRange(SmashkitError):
    pass


class ParamsInvalid(SmashkitError):
    pass


class RootOfUnityUnavailable(SmashkitError):
    """A construction needs a root of unity the chosen field does not contain."""


class FormatError(SmashkitError):
    """Malformed or inconsistent input file."""


class InternalConsistencyError(SmashkitError):
    """Two provably equivalent computations disagreed; indicates a bug."""
