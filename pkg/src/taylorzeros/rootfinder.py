"""Simultaneous root finding for dense real-coefficient polynomials.

All zeros are refined together (Ehrlich/Aberth corrections), and every
returned root carries a residual certificate

    |p(z)| <= rel_tol * sum_k |c_k| |z|**k * degree,

so downstream disk counting can reject under-converged output instead of
silently trusting it.  Exact zero coefficients at the low end are split
off beforehand as origin roots; no deflation happens during iteration.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import DegenerateInput, NoConvergence

_ANGLE_OFFSET = 0.4  # radians; breaks the conjugate symmetry of the start circle


@dataclass(frozen=True, eq=False)
class RootSet:
    """Certified roots of one polynomial.

    ``roots`` excludes the origin; exact zeros at z = 0 are reported via
    ``trailing_zero_multiplicity``.  ``degree`` is the degree after exact
    leading-zero stripping, so len(roots) + multiplicity == degree.
    ``residuals`` holds |p(z)| / sum_k |c_k| |z|**k per root.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    degree: int
    trailing_zero_multiplicity: int


@dataclass(frozen=True)
class DiskCount:
    inside: int
    on_boundary: int
    outside: int
    boundary_tolerance: float


def polynomial_value(coeffs: np.ndarray, z: complex) -> complex:
    """Horner evaluation of ascending real coefficients at complex z."""
    acc = 0j
    for ck in np.asarray(coeffs, dtype=float)[::-1]:
        acc = acc * z + ck
    return acc


def residual_bound(coeffs: np.ndarray, z: complex) -> float:
    """sum_k |c_k| |z|**k, the scale against which residuals are judged."""
    acc = 0.0
    az = abs(z)
    for ck in np.asarray(coeffs, dtype=float)[::-1]:
        acc = acc * az + abs(ck)
    return acc


def relative_residual(coeffs: np.ndarray, z: complex) -> float:
    """|p(z)| divided by the evaluation-scale bound at z.

    Coefficients are normalized by their largest modulus and, for |z| > 1,
    the reversal identity p(z) = z**n q(1/z) moves the evaluation inside
    the unit disk, so the ratio never overflows; both transformations
    leave the ratio unchanged.
    """
    arr = np.asarray(coeffs, dtype=float)
    arr = arr / np.max(np.abs(arr))
    z = complex(z)
    if abs(z) > 1.0:
        arr = arr[::-1]
        z = 1.0 / z
    return abs(polynomial_value(arr, z)) / residual_bound(arr, z)


@numba.njit(cache=True)
def _aberth_kernel(w, z, rel_tol, max_iter, deg_mult):  # pragma: no cover
    """In-place Ehrlich/Aberth sweep on the scaled coefficients w.

    Returns the number of iterations used, or -1 if some residual is
    still above rel_tol * deg_mult * bound after max_iter sweeps.
    Residual checks use the reversal identity outside the unit disk so
    the scale bound stays representable for any iterate.
    """
    n = z.size
    nc = w.size
    conv = np.zeros(n, np.bool_)
    for it in range(max_iter + 1):
        all_ok = True
        for i in range(n):
            zi = z[i]
            acc = 0.0 + 0.0j
            bnd = 0.0
            if abs(zi) <= 1.0:
                for k in range(nc - 1, -1, -1):
                    acc = acc * zi + w[k]
                    bnd = bnd * abs(zi) + abs(w[k])
            else:
                wi = 1.0 / zi
                awi = abs(wi)
                for k in range(nc):
                    acc = acc * wi + w[k]
                    bnd = bnd * awi + abs(w[k])
            conv[i] = abs(acc) <= rel_tol * deg_mult * bnd
            if not conv[i]:
                all_ok = False
        if all_ok:
            return it
        if it == max_iter:
            return -1
        for i in range(n):
            if conv[i]:
                continue
            zi = z[i]
            dacc = 0.0 + 0.0j
            acc = 0.0 + 0.0j
            for k in range(nc - 1, -1, -1):
                dacc = dacc * zi + acc
                acc = acc * zi + w[k]
            s = 0.0 + 0.0j
            collided = False
            for j in range(n):
                if j != i:
                    d = zi - z[j]
                    if d == 0:
                        collided = True
                    else:
                        s += 1.0 / d
            if collided:
                # nudge deterministically and retry next sweep
                z[i] = zi * (1.0 + 1e-8) + 1e-8 * (1.0 + 1.0j)
                continue
            if dacc != 0:
                newton = acc / dacc
            else:
                newton = (1.0 + abs(zi)) * 1e-3 * cmath.exp(1j * (0.917 * (it + 1) + i))
            den = 1.0 - newton * s
            if den != 0:
                step = newton / den
            else:
                step = newton
            if not (abs(step.real) <= 1.0e308 and abs(step.imag) <= 1.0e308):
                # evaluation overflowed far outside the root region:
                # contract deterministically toward it instead
                z[i] = zi * 0.7
                continue
            z[i] = zi - step
    return -1


def _initial_points(w: np.ndarray) -> np.ndarray:
    """Newton-polygon start points.

    The upper convex hull of (k, log|w_k|) splits the degree into groups;
    each hull edge k1 -> k2 contributes k2 - k1 points at the modulus
    |w_k1 / w_k2| ** (1/(k2-k1)), the classic per-scale root estimate.
    Angles are spread globally with a fixed offset to break symmetry.
    A single circle at the Cauchy-bound scale stalls badly when the
    coefficients grow or decay geometrically, which is the normal case
    for these sections.
    """
    n = w.size - 1
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(w))
    hull = [0]
    for k in range(1, n + 1):
        if np.isneginf(logs[k]):
            continue
        while len(hull) >= 2:
            k1, k2 = hull[-2], hull[-1]
            cross = (k2 - k1) * (logs[k] - logs[k1]) - (k - k1) * (logs[k2] - logs[k1])
            if cross >= 0.0:
                hull.pop()
            else:
                break
        hull.append(k)
    radii = np.empty(n)
    pos = 0
    for k1, k2 in zip(hull[:-1], hull[1:]):
        r = math.exp(min(max((logs[k1] - logs[k2]) / (k2 - k1), -345.0), 345.0))
        radii[pos : pos + (k2 - k1)] = r
        pos += k2 - k1
    angles = 2.0 * np.pi * np.arange(n) / n + _ANGLE_OFFSET
    return radii * np.exp(1j * angles)


def find_roots(coeffs, rel_tol: float = 1e-13, max_iter: int = 200) -> RootSet:
    """All complex zeros of a real polynomial, residual-certified.

    Exact leading zero coefficients lower the degree; exact trailing
    zeros become origin roots reported via trailing_zero_multiplicity.
    Raises DegenerateInput when nothing remains to solve and
    NoConvergence when the iteration budget runs out.
    """
    arr = np.atleast_1d(np.asarray(coeffs, dtype=float))
    nz = np.nonzero(arr)[0]
    if nz.size == 0:
        raise DegenerateInput("all coefficients are zero")
    lead = int(nz[-1])
    trail = int(nz[0])
    if lead == 0:
        raise DegenerateInput("constant polynomial has no roots")
    degree = lead
    mult = trail
    core = arr[trail : lead + 1]
    n = core.size - 1
    if n == 0:
        return RootSet((), (), degree, mult)

    scaled = core / np.max(np.abs(core))
    if n == 1:
        roots = np.array([complex(-scaled[0] / scaled[1])])
    else:
        roots = _initial_points(scaled).astype(np.complex128)
        code = _aberth_kernel(scaled, roots, float(rel_tol), int(max_iter), float(degree))
        if code < 0:
            worst = max(relative_residual(scaled, z) for z in roots)
            raise NoConvergence(
                f"residual {worst:.3e} above {rel_tol * degree:.3e} "
                f"after {max_iter} iterations (degree {n})"
            )

    ordered = sorted((complex(z) for z in roots), key=lambda z: (abs(z), cmath.phase(z)))
    residuals = tuple(float(relative_residual(arr, z)) for z in ordered)
    return RootSet(tuple(ordered), residuals, degree, mult)


def count_in_disk(rs: RootSet, radius: float, boundary_rel_tol: float = 1e-8) -> DiskCount:
    """Partition the non-origin roots against the circle |z| = radius.

    A root is on the boundary iff ||z| - radius| <= boundary_rel_tol * radius,
    inside iff |z| < radius * (1 - boundary_rel_tol), outside otherwise.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    inside = on = outside = 0
    band = boundary_rel_tol * radius
    for z in rs.roots:
        r = abs(z)
        if abs(r - radius) <= band:
            on += 1
        elif r < radius - band:
            inside += 1
        else:
            outside += 1
    return DiskCount(inside, on, outside, boundary_rel_tol)
