class BohrMajorantError(Exception):
    pass


class NonzeroInnerConstantTerm(BohrMajorantError, ValueError):
    pass


class ZeroConstantTerm(BohrMajorantError, ValueError):
    pass


class NonFiniteCoefficient(BohrMajorantError, ValueError):
    pass


class ParameterOutOfRange(BohrMajorantError, ValueError):
    pass


class RadiusOutOfRange(BohrMajorantError, ValueError):
    pass


class InvalidSchwarz(BohrMajorantError, ValueError):
    pass


class NotAUnivalentWitness(BohrMajorantError, ValueError):
    pass


class SpecSyntaxError(BohrMajorantError, ValueError):
    """Malformed function spec, series JSON or witness file."""


class BudgetExhausted(BohrMajorantError, RuntimeError):
    """Inconclusive verdict survived the whole precision ladder."""
