"""Regime selection for the zero-locus statements.

Three parameter regimes admit a clean answer to "on which side of the
circle |z| = |c|/|a*alpha| do the zeros of P_m fall for large m":

* T1: ac < 0 and a0*b*(a1*c + b*a0) >= 0 -- zeros outside the open ball,
  except possibly one, present exactly when |a1*c + b*a0| > |a*alpha*a0|;
* T2: ac > 0, b**2 - 4ac > 0, a0*b*(a1*c + b*a0) <= 0 -- zeros inside the
  closed ball;
* T3: ac > 0, b**2 - 4ac > 0, a0*b*(a1*c + b*a0) > 0 and additionally
  |a0*c| > |(a1*c + b*a0)*alpha| -- zeros inside the closed ball.

Everything else is labeled None/Unknown.  The module also samples the
comparison inequality behind these statements on circles |z| = t2 -+ eps
and reports the worst margin, which certifies the strict inequality at
the sampled points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import OutOfTheoremScope, RegimeMismatch
from .polynomials import rouche_side_values
from .recurrence import CharacteristicData, RecurrenceSpec


class Theorem(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    NONE = "None"


class Locus(Enum):
    OUTSIDE_OPEN_BALL = "OutsideOpenBall"
    INSIDE_CLOSED_BALL = "InsideClosedBall"
    UNKNOWN = "Unknown"


class Regime(Enum):
    AC_NEG = "ACNeg"
    AC_POS_CD_NONNEG = "ACPosCDNonneg"
    AC_POS_CD_NEG = "ACPosCDNeg"


@dataclass(frozen=True)
class HypothesisRecord:
    """One atomic condition: for inequalities of the form |x| > |y| the
    stored value is the gap |x| - |y|; otherwise the tested expression."""

    condition: str
    value: float
    satisfied: bool


@dataclass(frozen=True)
class Classification:
    theorem: Theorem
    critical_radius: float
    predicted_locus: Locus
    exceptional_zero_predicted: bool
    hypothesis_trace: tuple[HypothesisRecord, ...]


_LOCUS_OF = {
    Theorem.T1: Locus.OUTSIDE_OPEN_BALL,
    Theorem.T2: Locus.INSIDE_CLOSED_BALL,
    Theorem.T3: Locus.INSIDE_CLOSED_BALL,
    Theorem.NONE: Locus.UNKNOWN,
}


def classify(spec: RecurrenceSpec, char: CharacteristicData) -> Classification:
    """Decide which regime applies and record every condition evaluated."""
    ac = spec.a * spec.c
    pivot = spec.a1 * spec.c + spec.b * spec.a0
    q = spec.a0 * spec.b * pivot
    trace: list[HypothesisRecord] = []

    def record(condition: str, value: float, satisfied: bool) -> bool:
        trace.append(HypothesisRecord(condition, value, satisfied))
        return satisfied

    exceptional = False
    if record("ac < 0", ac, char.sign_ac < 0):
        if record("a0*b*(a1*c + b*a0) >= 0", q, q >= 0.0):
            theorem = Theorem.T1
            gap = abs(pivot) - abs(spec.a) * abs(char.alpha) * abs(spec.a0)
            exceptional = record("|a1*c + b*a0| > |a*alpha*a0|", gap, gap > 0.0)
        else:
            theorem = Theorem.NONE
    elif record("b^2 - 4*a*c > 0", char.discriminant, char.discriminant > 0.0):
        if record("a0*b*(a1*c + b*a0) <= 0", q, q <= 0.0):
            theorem = Theorem.T2
        else:
            gap = abs(spec.a0 * spec.c) - abs(pivot) * abs(char.alpha)
            if record("|a0*c| > |(a1*c + b*a0)*alpha|", gap, gap > 0.0):
                theorem = Theorem.T3
            else:
                theorem = Theorem.NONE
    else:
        theorem = Theorem.NONE

    return Classification(
        theorem=theorem,
        critical_radius=char.critical_radius,
        predicted_locus=_LOCUS_OF[theorem],
        exceptional_zero_predicted=exceptional,
        hypothesis_trace=tuple(trace),
    )


def predicted_inside_count_H(char: CharacteristicData, m: int) -> int:
    """How many zeros of H_m the closed disk |z| <= t2 holds for large m.

    Only derived for ac < 0 with C*D >= 0: m - 1 when |C| > |D|*t2
    (one zero escapes), m otherwise.
    """
    if char.sign_ac > 0:
        raise OutOfTheoremScope("inside count is only derived for ac < 0")
    if char.C * char.D < 0:
        raise OutOfTheoremScope("inside count needs C*D >= 0")
    return m - 1 if abs(char.C) > abs(char.D) * abs(char.t2) else m


def default_epsilon(char: CharacteristicData) -> float:
    """Circle offset used by the margin samplers: min(0.01, (t2 - 1)/10).

    Needs t2 > 1, which holds in every regime the sampler accepts.
    """
    t2 = abs(char.t2)
    if t2 <= 1.0:
        raise RegimeMismatch(f"no sampling window: t2 = {t2} is not > 1")
    return min(0.01, (t2 - 1.0) / 10.0)


def _check_regime(char: CharacteristicData, regime: Regime) -> None:
    cd = char.C * char.D
    if regime is Regime.AC_NEG:
        if char.sign_ac > 0 or cd < 0:
            raise RegimeMismatch("ACNeg needs ac < 0 and C*D >= 0")
        return
    if char.sign_ac < 0 or char.discriminant <= 0:
        raise RegimeMismatch(f"{regime.value} needs ac > 0 and b^2 - 4ac > 0")
    if regime is Regime.AC_POS_CD_NONNEG:
        if cd < 0:
            raise RegimeMismatch("ACPosCDNonneg needs C*D >= 0")
        return
    # AC_POS_CD_NEG: normalize the pair so D > 0, then require C < 0 and
    # D + C*t2 > 0; margins are invariant under jointly negating (C, D)
    c_n, d_n = (-char.C, -char.D) if char.D < 0 else (char.C, char.D)
    if not (d_n > 0 and c_n < 0):
        raise RegimeMismatch("ACPosCDNeg needs C*D < 0")
    if d_n + c_n * abs(char.t2) <= 0:
        raise RegimeMismatch("ACPosCDNeg needs D + C*t2 > 0 after normalization")


def rouche_margin(
    char: CharacteristicData,
    m: int,
    epsilon: float | None,
    n_samples: int,
    regime: Regime,
) -> float:
    """Worst sampled gap between the two sides of the comparison inequality.

    Samples n_samples points uniformly in angle on |z| = t2 + eps (ACNeg)
    or t2 - eps (both ACPos regimes) and returns min(dominant - remainder)
    resp. min(remainder - dominant).  A positive value certifies the
    strict inequality at every sampled point.  epsilon None means the
    per-instance default window.
    """
    if n_samples < 8:
        raise ValueError(f"need at least 8 samples, got {n_samples}")
    _check_regime(char, regime)
    if epsilon is None:
        epsilon = default_epsilon(char)
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    t2 = abs(char.t2)
    radius = t2 + epsilon if regime is Regime.AC_NEG else t2 - epsilon
    if radius <= 0.0:
        raise ValueError(f"sample circle radius {radius} is not positive")
    orient = 1.0 if regime is Regime.AC_NEG else -1.0

    worst = math.inf
    for k in range(n_samples):
        theta = 2.0 * math.pi * k / n_samples
        z = complex(radius * math.cos(theta), radius * math.sin(theta))
        dominant, remainder, log_scale = rouche_side_values(char, m, z)
        gap = orient * (dominant - remainder)
        try:
            margin = gap * math.exp(log_scale)
        except OverflowError:
            margin = math.copysign(math.inf, gap) if gap != 0.0 else 0.0
        if margin < worst:
            worst = margin
    return worst
