"""relcorr Correlation Errors

Exception hierarchy shared by the closed forms, the oracle and the engine.
"""


class CorrelationError(Exception):
    """Base exception for correlation requests."""
    pass


class ClosedFormError(CorrelationError):
    """Closed form evaluated outside its domain."""
    pass


class ClosedFormUnavailableError(CorrelationError):
    """No closed form is known for the requested combination."""

    def __init__(self, spin, operator):
        super().__init__(
            f"closed form unavailable for spin-{spin.value} {operator.label} spin "
            f"outside the c.m. frame; use the oracle backend instead (--backend oracle)")
        self.spin = spin
        self.operator = operator


class OracleError(CorrelationError):
    """Observables and state do not fit together."""
    pass


class ImaginaryCorrelationError(OracleError):
    """The expectation value came out complex beyond tolerance."""

    def __init__(self, imaginary: float, tolerance: float):
        super().__init__(
            f"correlation numerator has imaginary part {imaginary:.3e} "
            f"(tolerance {tolerance:.1e}); observables are not Hermitian")
        self.imaginary = imaginary
        self.tolerance = tolerance
