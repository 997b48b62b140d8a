"""Coefficient vectors for the partial-sum polynomials and their rescalings.

Three families share one container:

* P_m(z)  = sum_{n<=m} a_n z^n, the plain partial sums of the series;
* P*_m(z) = sum_{n<=m} a_n z^(m-n), the coefficient reversal;
* H_m(z), the reversal pushed through the sign/scale substitution, whose
  zero set lives next to the circle |z| = t2.

All three have real coefficients; complex numbers enter only at
evaluation time.  H_m also has a closed rational form built from
(t1, t2, B, C, D), implemented here with a log-magnitude guard so that
large m degrades into an explicit Overflow instead of silent infinities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateDiscriminant, Overflow, PoleEvaluation
from .recurrence import CharacteristicData, RecurrenceSpec, _sign, generate_sequence

_LOG_MAX_DOUBLE = math.log(np.finfo(float).max)  # ~709.78


class PolyKind(Enum):
    P = "P"
    PSTAR = "Pstar"
    H = "H"


@dataclass(frozen=True, eq=False)
class PolynomialCoeffs:
    """Dense real coefficients, ascending powers, length m+1."""

    kind: PolyKind
    m: int
    coeffs: np.ndarray


def taylor_poly(spec: RecurrenceSpec, m: int) -> PolynomialCoeffs:
    """P_m: the sequence terms a_0..a_m as coefficients."""
    seq = generate_sequence(spec, m)
    return PolynomialCoeffs(PolyKind.P, m, np.asarray(seq, dtype=float))


def reciprocal_poly(p: PolynomialCoeffs) -> PolynomialCoeffs:
    """Reverse the coefficients of a kind-P polynomial."""
    if p.kind is not PolyKind.P:
        raise ValueError(f"expected kind P, got {p.kind}")
    return PolynomialCoeffs(PolyKind.PSTAR, p.m, p.coeffs[::-1].copy())


def normalized_H(spec: RecurrenceSpec, m: int) -> PolynomialCoeffs:
    """H_m coefficients.

    Substituting z -> -sign(ab)*sqrt|a/c| z into the reversal and
    rescaling by sign(-ab)**m * |c/a|**(m/2) collapses to

        h_k = (-sign(ab))**(m+k) * sqrt|c/a|**(m-k) * a_{m-k},

    which stays real and keeps the sign bookkeeping exact.
    """
    seq = generate_sequence(spec, m)
    sign_ab = _sign(spec.a) * _sign(spec.b)
    r = math.sqrt(abs(spec.c)) / math.sqrt(abs(spec.a))
    k = np.arange(m + 1)
    signs = np.where((m + k) % 2 == 0, 1.0, -1.0) if sign_ab > 0 else 1.0
    coeffs = signs * r ** (m - k) * np.asarray(seq, dtype=float)[::-1]
    if not np.all(np.isfinite(coeffs)):
        raise Overflow(f"H_{m} coefficients left the finite range")
    return PolynomialCoeffs(PolyKind.H, m, coeffs)


def eval_poly(p: PolynomialCoeffs, z: complex) -> complex:
    """Horner evaluation of the coefficient vector at z."""
    acc = 0j
    for ck in p.coeffs[::-1]:
        acc = acc * z + ck
    return acc


def _scaled_h_terms(
    char: CharacteristicData, m: int, z: complex
) -> tuple[complex, complex, complex, float]:
    """The three numerator terms of the closed form, scaled by w**-(m+1).

    w = max(|t2|, |z|) >= 1, so every power ratio has modulus <= 1 and the
    scaled terms cannot overflow; the caller reapplies exp(log_scale).
    Returns (t2_term, t1_term, z_term, log_scale).
    """
    t1, t2 = char.t1, char.t2
    s = char.sign_ac
    w = max(abs(t2), abs(z))
    log_scale = (m + 1) * math.log(w)
    term_t2 = -((t2 / w) ** (m + 1)) * (1.0 - z * t2) * (char.C * t1 + char.D)
    term_t1 = -((t1 / w) ** (m + 1)) * (z * t1 - 1.0) * (char.C * t2 + char.D)
    term_z = s ** (m + 1) * (z / w) ** (m + 1) * (t1 - t2) * (char.C + char.D * z)
    return term_t2, term_t1, term_z, log_scale


def h_numerator(char: CharacteristicData, m: int, z: complex) -> complex:
    """Numerator polynomial of the closed form for H_m, evaluated at z.

    This is the degree-(m+2) comparison polynomial whose zero count in a
    disk transfers to H_m; -t1 and -t2 are among its zeros when ac < 0.
    """
    term_t2, term_t1, term_z, log_scale = _scaled_h_terms(char, m, complex(z))
    try:
        return (term_t2 + term_t1 + term_z) * math.exp(log_scale)
    except OverflowError:
        raise Overflow(f"comparison polynomial value overflows at m = {m}") from None


def h_closed_form(char: CharacteristicData, m: int, z: complex) -> complex:
    """Evaluate H_m(z) through the rational closed form.

    Requires t1 != t2 and z away from the poles 1/t1, 1/t2.  Magnitudes
    are assembled in log scale so that values representable in a double
    come out exact to rounding and anything larger raises Overflow.
    """
    if char.discriminant == 0.0 or char.t1 == char.t2:
        raise DegenerateDiscriminant("closed form needs t1 != t2 (b**2 != 4*a*c)")
    z = complex(z)
    d1 = 1.0 - z * char.t1
    d2 = 1.0 - z * char.t2
    if abs(d1) < 1e-14 or abs(d2) < 1e-14:
        raise PoleEvaluation(f"z = {z} is within 1e-14 of a pole 1/t1 or 1/t2")
    term_t2, term_t1, term_z, log_scale = _scaled_h_terms(char, m, z)
    q = (term_t2 + term_t1 + term_z) / ((char.t1 - char.t2) * d1 * d2)
    if q == 0:
        return 0j
    mag_log = log_scale + math.log(abs(q))
    if mag_log > _LOG_MAX_DOUBLE:
        raise Overflow(f"|H_{m}({z})| exceeds the double range")
    return char.sign_ac**m * (q / abs(q)) * math.exp(mag_log)


def rouche_side_values(
    char: CharacteristicData, m: int, z: complex
) -> tuple[float, float, float]:
    """Moduli of the dominant and remainder sides of the comparison split.

    dominant  = |z^(m+1) (t1 - t2) (C + D z)|
    remainder = |t2^(m+1) (1 - z t2) (C t1 + D) + t1^(m+1) (z t1 - 1) (C t2 + D)|

    Returned scaled by w**-(m+1) together with log_scale, so margins can
    be reassembled with overflow-aware sign handling by the caller.
    """
    term_t2, term_t1, term_z, log_scale = _scaled_h_terms(char, m, complex(z))
    # remainder terms carry a leading minus in the numerator; drop it here
    return abs(term_z), abs(term_t2 + term_t1), log_scale
