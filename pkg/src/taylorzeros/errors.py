"""Exception types shared across the library.

Every exception carries a stable ``code`` string so front ends can map
failures to machine-readable error records.
"""


class TaylorZerosError(Exception):
    """Base class for all errors raised by this package."""

    code = "Error"


class ZeroCoefficient(TaylorZerosError):
    """One of the recurrence weights a, b, c is zero."""

    code = "ZeroCoefficient"


class ZeroInitialValues(TaylorZerosError):
    """Both initial values are zero, so the whole sequence vanishes."""

    code = "ZeroInitialValues"


class NonFinite(TaylorZerosError):
    """An input is NaN or infinite."""

    code = "NonFinite"


class Overflow(TaylorZerosError):
    """A computed quantity left the finite double range."""

    code = "Overflow"


class DegenerateDiscriminant(TaylorZerosError):
    """b**2 == 4*a*c: the characteristic roots coincide."""

    code = "DegenerateDiscriminant"


class NoConvergence(TaylorZerosError):
    """Root iteration exhausted its budget above the residual threshold."""

    code = "NoConvergence"


class DegenerateInput(TaylorZerosError):
    """Polynomial input with no roots to find (constant or identically zero)."""

    code = "DegenerateInput"


class PoleEvaluation(TaylorZerosError):
    """Closed-form evaluation requested too close to a pole."""

    code = "PoleEvaluation"


class RegimeMismatch(TaylorZerosError):
    """Parameters do not satisfy the preconditions of the requested regime."""

    code = "RegimeMismatch"


class OutOfTheoremScope(TaylorZerosError):
    """Operation asked for a quantity outside its regime of validity."""

    code = "OutOfTheoremScope"
