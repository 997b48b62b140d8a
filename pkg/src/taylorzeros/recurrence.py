"""Three-term recurrences and their characteristic data.

A real sequence {a_n} is fixed by five numbers (a, b, c, a0, a1) through

    c*a[n+2] + b*a[n+1] + a*a[n] = 0,      n >= 0,

with a*b*c != 0 and (a0, a1) != (0, 0).  The quadratic c + b*t + a*t**2
controls the growth of the sequence, and a sign/scale substitution turns
it into the normalized quadratic 1 + B*t + sign(ac)*t**2 whose zeros
t1, t2 drive everything downstream: the critical radius that separates
the zeros of the partial sums lives at |c|/|a*alpha| where alpha is the
largest-modulus zero of the original quadratic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateDiscriminant,
    NonFinite,
    Overflow,
    ZeroCoefficient,
    ZeroInitialValues,
)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Validated parameters (a, b, c, a0, a1) of a three-term recurrence."""

    a: float
    b: float
    c: float
    a0: float
    a1: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.a, self.b, self.c, self.a0, self.a1)


@dataclass(frozen=True)
class CharacteristicData:
    """Derived quantities of c + b*t + a*t**2 and its normalized form.

    alpha, beta      zeros of the quadratic, |alpha| >= |beta|
    t1, t2           zeros of 1 + B*t + sign_ac*t**2, |t2| >= |t1|
    B, C, D          constants of the normalized generating function
    discriminant     b**2 - 4*a*c
    sign_ac          +1 or -1
    critical_radius  |c| / (|a| * |alpha|)
    """

    alpha: complex
    beta: complex
    t1: complex
    t2: complex
    B: float
    C: float
    D: float
    discriminant: float
    sign_ac: int
    critical_radius: float


def _sign(x: float) -> int:
    # only called on validated nonzero inputs
    return 1 if x > 0 else -1


def validate(a: float, b: float, c: float, a0: float, a1: float) -> RecurrenceSpec:
    """Check raw parameters and return a RecurrenceSpec.

    Raises NonFinite, ZeroCoefficient, or ZeroInitialValues.
    """
    try:
        vals = [float(v) for v in (a, b, c, a0, a1)]
    except (TypeError, ValueError) as exc:
        raise NonFinite(f"parameters must be real numbers: {exc}") from None
    if not all(math.isfinite(v) for v in vals):
        raise NonFinite(f"parameters must be finite, got {tuple(vals)}")
    a, b, c, a0, a1 = vals
    if a == 0.0 or b == 0.0 or c == 0.0:
        raise ZeroCoefficient(f"need a*b*c != 0, got (a, b, c) = {(a, b, c)}")
    if a0 == 0.0 and a1 == 0.0:
        raise ZeroInitialValues("initial values (0, 0) generate the zero sequence")
    return RecurrenceSpec(a, b, c, a0, a1)


def generate_sequence(spec: RecurrenceSpec, m: int) -> list[float]:
    """First m+1 terms a_0 .. a_m, advancing a[n+2] = -(b*a[n+1] + a*a[n])/c.

    Raises Overflow as soon as a term leaves the finite double range.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    seq = [spec.a0]
    if m == 0:
        return seq
    seq.append(spec.a1)
    prev, cur = spec.a0, spec.a1
    for n in range(m - 1):
        nxt = -(spec.b * cur + spec.a * prev) / spec.c
        if not math.isfinite(nxt):
            raise Overflow(f"sequence term {n + 2} is non-finite")
        seq.append(nxt)
        prev, cur = cur, nxt
    return seq


def _quadratic_roots(a: float, b: float, c: float, disc: float) -> tuple[complex, complex]:
    # larger-magnitude root first via the cancellation-free form
    if disc >= 0.0:
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        return complex(q / a), complex(c / q)
    im = math.sqrt(-disc) / (2.0 * a)
    re = -b / (2.0 * a)
    return complex(re, im), complex(re, -im)


def characteristic(spec: RecurrenceSpec) -> CharacteristicData:
    """Compute alpha, beta, t1, t2, B, C, D and the critical radius.

    Ordering is deterministic: |t2| >= |t1|, and when the moduli tie
    (conjugate pair) t2 is the root with nonnegative imaginary part.
    """
    a, b, c = spec.a, spec.b, spec.c
    disc = b * b - 4.0 * a * c
    sign_ac = _sign(a) * _sign(c)
    sign_ab = _sign(a) * _sign(b)
    sqrt_a, sqrt_c = math.sqrt(abs(a)), math.sqrt(abs(c))
    ratio_ca = sqrt_c / sqrt_a  # sqrt|c/a|

    B = -sign_ac * abs(b) / (sqrt_a * sqrt_c)
    C = -(spec.a1 + b * spec.a0 / c) * sign_ab * ratio_ca
    D = spec.a0

    s_hi, s_lo = _quadratic_roots(a, b, c, disc)
    # the substitution s = -sign(ab)*sqrt|c/a| * t maps t-roots to s-roots
    t_hi = -sign_ab * s_hi / ratio_ca
    t_lo = -sign_ab * s_lo / ratio_ca
    if abs(t_hi) < abs(t_lo):
        s_hi, s_lo, t_hi, t_lo = s_lo, s_hi, t_lo, t_hi
    elif abs(t_hi) == abs(t_lo) and t_hi != t_lo:
        # conjugate pair: put the nonnegative-imaginary root in t2;
        # equal-modulus real roots would need b == 0, which validate forbids
        if t_hi.imag < t_lo.imag or (t_hi.imag == t_lo.imag and t_hi.real < t_lo.real):
            s_hi, s_lo, t_hi, t_lo = s_lo, s_hi, t_lo, t_hi

    critical_radius = (abs(c) / abs(a)) / abs(s_hi)
    return CharacteristicData(
        alpha=s_hi,
        beta=s_lo,
        t1=t_lo,
        t2=t_hi,
        B=B,
        C=C,
        D=D,
        discriminant=disc,
        sign_ac=sign_ac,
        critical_radius=critical_radius,
    )


def closed_form_term(char: CharacteristicData, spec: RecurrenceSpec, n: int) -> float:
    """Term a_n from the two-root resolution instead of the recurrence.

    With lambda_k = 1/alpha, 1/beta the growth rates (the zeros of
    c*x**2 + b*x + a), solve A + A' = a0, A*l1 + A'*l2 = a1 and return
    A*l1**n + A'*l2**n.  Requires distinct characteristic roots.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if char.discriminant == 0.0 or char.alpha == char.beta:
        raise DegenerateDiscriminant("repeated characteristic root: b**2 == 4*a*c")
    l1 = 1.0 / char.alpha
    l2 = 1.0 / char.beta
    # solve each amplitude by its own determinant; deriving one from the
    # other cancels catastrophically when that amplitude is tiny
    amp1 = (spec.a1 - spec.a0 * l2) / (l1 - l2)
    amp2 = (spec.a1 - spec.a0 * l1) / (l2 - l1)
    return (amp1 * l1**n + amp2 * l2**n).real
