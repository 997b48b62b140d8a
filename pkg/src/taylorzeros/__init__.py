"""Zero localization for partial sums of three-term recurrence series.

Given real (a, b, c, a0, a1) with a*b*c != 0 and (a0, a1) != (0, 0), the
sequence c*a[n+2] + b*a[n+1] + a*a[n] = 0 defines partial-sum polynomials
P_m(z) = sum a_n z^n.  This package generates the sequence, builds P_m,
its reversal, and the normalized form H_m, finds all their complex zeros
with certified residuals, decides which side of the circle of radius
|c|/|a*alpha| the zeros settle on for large m, and verifies the decision
numerically on single instances and seeded random sweeps.
"""

from .classifier import (
    Classification,
    HypothesisRecord,
    Locus,
    Regime,
    Theorem,
    classify,
    default_epsilon,
    predicted_inside_count_H,
    rouche_margin,
)
from .errors import (
    DegenerateDiscriminant,
    DegenerateInput,
    NoConvergence,
    NonFinite,
    OutOfTheoremScope,
    Overflow,
    PoleEvaluation,
    RegimeMismatch,
    TaylorZerosError,
    ZeroCoefficient,
    ZeroInitialValues,
)
from .polynomials import (
    PolyKind,
    PolynomialCoeffs,
    eval_poly,
    h_closed_form,
    h_numerator,
    normalized_H,
    reciprocal_poly,
    rouche_side_values,
    taylor_poly,
)
from .recurrence import (
    CharacteristicData,
    RecurrenceSpec,
    characteristic,
    closed_form_term,
    generate_sequence,
    validate,
)
from .rootfinder import (
    DiskCount,
    RootSet,
    count_in_disk,
    find_roots,
    polynomial_value,
    relative_residual,
    residual_bound,
)
from .verifier import (
    CircleDistanceStat,
    ParamBox,
    PerMRecord,
    SweepReport,
    TheoremStats,
    VerificationReport,
    circle_convergence,
    find_threshold_m,
    sample_spec,
    sweep,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CharacteristicData",
    "CircleDistanceStat",
    "Classification",
    "DegenerateDiscriminant",
    "DegenerateInput",
    "DiskCount",
    "HypothesisRecord",
    "Locus",
    "NoConvergence",
    "NonFinite",
    "OutOfTheoremScope",
    "Overflow",
    "ParamBox",
    "PerMRecord",
    "PoleEvaluation",
    "PolyKind",
    "PolynomialCoeffs",
    "RecurrenceSpec",
    "Regime",
    "RegimeMismatch",
    "RootSet",
    "SweepReport",
    "TaylorZerosError",
    "Theorem",
    "TheoremStats",
    "VerificationReport",
    "ZeroCoefficient",
    "ZeroInitialValues",
    "characteristic",
    "circle_convergence",
    "classify",
    "closed_form_term",
    "count_in_disk",
    "default_epsilon",
    "eval_poly",
    "find_roots",
    "find_threshold_m",
    "generate_sequence",
    "h_closed_form",
    "h_numerator",
    "normalized_H",
    "polynomial_value",
    "predicted_inside_count_H",
    "reciprocal_poly",
    "relative_residual",
    "residual_bound",
    "rouche_margin",
    "rouche_side_values",
    "sample_spec",
    "sweep",
    "taylor_poly",
    "validate",
    "verify_instance",
]
