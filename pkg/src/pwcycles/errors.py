"""Exception hierarchy. CLI exit codes hang off the class attribute."""


class PWCyclesError(Exception):
    exit_code = 1


class ConfigError(PWCyclesError):
    exit_code = 2


class InvalidParameters(ConfigError):
    """Family/affine/center constraints violated; ``violations`` lists them."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid parameters: " + "; ".join(self.violations))


class PolynomialError(PWCyclesError):
    exit_code = 3


class NothingToEliminate(PolynomialError):
    pass


class NonIsolatingBracket(PolynomialError):
    pass


class DegenerateCrossing(PolynomialError):
    """Crossing polynomial identically zero."""


class NonIsolatedSolutions(PolynomialError):
    """Resultant vanishes identically: the crossing curves share a component."""


class TranscriptionError(PWCyclesError):
    """An explicit vector field is not Hamiltonian for its first integral."""
    exit_code = 2


class IntegrationError(PWCyclesError):
    exit_code = 5


class NonTransversalCrossing(IntegrationError):
    pass


class NoReturnToSigma(IntegrationError):
    pass


class EquilibriumEncountered(IntegrationError):
    pass


class DegenerateCorner(IntegrationError):
    pass
