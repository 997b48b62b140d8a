"""End-to-end checks of the zero-locus statements on computed root sets.

Single instances are verified per m, an empirical threshold marks where
the "large m" behavior sets in for the tested range, seeded sweeps rake
random parameter boxes, and a distance statistic tracks how the zeros
crowd toward the critical circle as m grows.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass

import numpy as np

from .classifier import Classification, Theorem, classify
from .errors import NoConvergence, Overflow, RegimeMismatch
from .polynomials import taylor_poly
from .recurrence import RecurrenceSpec, characteristic
from .rootfinder import DiskCount, RootSet, count_in_disk, find_roots

M_CAP = 500  # past this the coefficient growth routinely overflows doubles

DEFAULT_M_VALUES = (10, 25, 50, 100)


@dataclass(frozen=True)
class PerMRecord:
    """Outcome of checking one section polynomial against the prediction.

    ``passed`` is None when the classification is None (nothing to judge).
    ``violations`` lists the roots on the wrong side of the circle, net of
    boundary tolerance and of the single allowed exceptional zero.
    """

    m: int
    disk_count: DiskCount
    violations: tuple[complex, ...]
    exceptional_found: bool
    max_residual: float
    passed: bool | None


@dataclass(frozen=True)
class CircleDistanceStat:
    m: int
    median_distance: float
    max_distance_of_closest_80pct: float


@dataclass(frozen=True)
class VerificationReport:
    spec: RecurrenceSpec
    classification: Classification
    per_m: tuple[PerMRecord, ...]
    empirical_threshold: int | None
    circle_distance_stats: tuple[CircleDistanceStat, ...]


@dataclass(frozen=True)
class ParamBox:
    """Sampling ranges, one (low, high) pair per parameter."""

    a: tuple[float, float] = (-5.0, 5.0)
    b: tuple[float, float] = (-5.0, 5.0)
    c: tuple[float, float] = (-5.0, 5.0)
    a0: tuple[float, float] = (-5.0, 5.0)
    a1: tuple[float, float] = (-5.0, 5.0)

    def lows(self) -> list[float]:
        return [self.a[0], self.b[0], self.c[0], self.a0[0], self.a1[0]]

    def highs(self) -> list[float]:
        return [self.a[1], self.b[1], self.c[1], self.a0[1], self.a1[1]]


@dataclass(frozen=True)
class TheoremStats:
    count: int
    n_violating_instances: int
    worst_violation_magnitude: float


@dataclass(frozen=True)
class InstanceNote:
    """Compact record of one sampled instance, for reporting only."""

    index: int
    params: tuple[float, float, float, float, float]
    theorem: str
    detail: str


@dataclass(frozen=True)
class SweepReport:
    seed: int
    n_instances: int
    m_values: tuple[int, ...]
    by_theorem: dict[str, TheoremStats]
    samples_outside_hypotheses: tuple[InstanceNote, ...]
    failures: tuple[InstanceNote, ...]


def _check_m(m: int) -> None:
    if not 1 <= m <= M_CAP:
        raise ValueError(f"m must be in [1, {M_CAP}], got {m}")


def _inside_roots(rs: RootSet, radius: float, tol: float) -> list[complex]:
    band = tol * radius
    return [z for z in rs.roots if abs(z) < radius - band]


def _outside_roots(rs: RootSet, radius: float, tol: float) -> list[complex]:
    band = tol * radius
    return [z for z in rs.roots if abs(z) > radius + band]


def _judge_one_m(
    classification: Classification,
    rs: RootSet,
    m: int,
    boundary_rel_tol: float,
) -> PerMRecord:
    radius = classification.critical_radius
    dc = count_in_disk(rs, radius, boundary_rel_tol)
    max_residual = max(rs.residuals, default=0.0)
    theorem = classification.theorem

    if theorem is Theorem.NONE:
        return PerMRecord(m, dc, (), False, max_residual, None)

    if theorem is Theorem.T1:
        inner = _inside_roots(rs, radius, boundary_rel_tol)
        # origin roots (a0 == 0 sections) sit strictly inside any ball
        inner = [0j] * rs.trailing_zero_multiplicity + inner
        found = len(inner) == 1
        allowed = 1 if classification.exceptional_zero_predicted else 0
        if classification.exceptional_zero_predicted and inner:
            violations = tuple(sorted(inner, key=abs)[1:])
        else:
            violations = tuple(inner)
        passed = len(inner) == allowed
        return PerMRecord(m, dc, violations, found, max_residual, passed)

    violations = tuple(_outside_roots(rs, radius, boundary_rel_tol))
    return PerMRecord(m, dc, violations, False, max_residual, not violations)


def _circle_stat(rs: RootSet, radius: float, m: int) -> CircleDistanceStat:
    dists = [abs(abs(z) - radius) for z in rs.roots]
    dists += [radius] * rs.trailing_zero_multiplicity
    dists.sort()
    k = max(1, int(0.8 * len(dists)))
    return CircleDistanceStat(m, statistics.median(dists), dists[k - 1])


def _threshold_from(records: list[tuple[int, bool | None]]) -> int | None:
    """Least tested m with every tested m' >= m passing."""
    threshold = None
    for m, passed in sorted(records, reverse=True):
        if passed:
            threshold = m
        else:
            break
    return threshold


def verify_instance(
    spec: RecurrenceSpec,
    m_values: tuple[int, ...] = DEFAULT_M_VALUES,
    boundary_rel_tol: float = 1e-8,
) -> VerificationReport:
    """Root every requested section and compare against the prediction.

    T1 passes at m iff the open critical ball holds exactly as many roots
    as the exceptional predicate says (0 or 1); T2/T3 pass iff no root
    lands outside the closed ball, both net of boundary tolerance.
    Overflow and NoConvergence propagate to the caller.
    """
    for m in m_values:
        _check_m(m)
    char = characteristic(spec)
    classification = classify(spec, char)
    strict_gap = abs(char.t2) > abs(char.t1)

    per_m: list[PerMRecord] = []
    stats: list[CircleDistanceStat] = []
    for m in sorted(m_values):
        rs = find_roots(taylor_poly(spec, m).coeffs)
        per_m.append(_judge_one_m(classification, rs, m, boundary_rel_tol))
        if strict_gap:
            stats.append(_circle_stat(rs, classification.critical_radius, m))

    threshold = None
    if classification.theorem is not Theorem.NONE:
        threshold = _threshold_from([(r.m, r.passed) for r in per_m])
    return VerificationReport(
        spec=spec,
        classification=classification,
        per_m=tuple(per_m),
        empirical_threshold=threshold,
        circle_distance_stats=tuple(stats),
    )


def find_threshold_m(spec: RecurrenceSpec, m_max: int) -> int | None:
    """Least m0 such that every m in [m0, m_max] passes, scanning all m.

    Returns None when even m_max fails.  Requires a T1/T2/T3 instance.
    """
    if m_max < 2:
        raise ValueError(f"m_max must be >= 2, got {m_max}")
    _check_m(m_max)
    char = characteristic(spec)
    classification = classify(spec, char)
    if classification.theorem is Theorem.NONE:
        raise RegimeMismatch("threshold search needs a T1/T2/T3 instance")
    records = []
    for m in range(1, m_max + 1):
        rs = find_roots(taylor_poly(spec, m).coeffs)
        records.append((m, _judge_one_m(classification, rs, m, 1e-8).passed))
    return _threshold_from(records)


def circle_convergence(
    spec: RecurrenceSpec, m_values: tuple[int, ...]
) -> list[CircleDistanceStat]:
    """Distance of the section zeros to the critical circle, per m.

    Reports the median and the maximum over the closest 80% of roots
    (a bounded number of roots may stay away from the circle, so the
    far tail is deliberately ignored).  Needs |t2| > |t1| strictly.
    """
    for m in m_values:
        _check_m(m)
    char = characteristic(spec)
    if not abs(char.t2) > abs(char.t1):
        raise RegimeMismatch("circle convergence needs |t2| > |t1| strictly")
    radius = char.critical_radius
    out = []
    for m in sorted(m_values):
        rs = find_roots(taylor_poly(spec, m).coeffs)
        out.append(_circle_stat(rs, radius, m))
    return out


def _violation_magnitude(record: PerMRecord, radius: float) -> float:
    if not record.violations:
        return 0.0
    return max(abs(abs(z) - radius) / radius for z in record.violations)


def sample_spec(rng: np.random.Generator, box: ParamBox) -> RecurrenceSpec:
    """One rejection-sampled instance: abc != 0, (a0, a1) != (0, 0), and
    |b^2 - 4ac| >= 1e-9 to stay clear of the ill-conditioned confluence."""
    lows, highs = box.lows(), box.highs()
    while True:
        a, b, c, a0, a1 = (float(v) for v in rng.uniform(lows, highs))
        if a == 0.0 or b == 0.0 or c == 0.0:
            continue
        if a0 == 0.0 and a1 == 0.0:
            continue
        if abs(b * b - 4.0 * a * c) < 1e-9:
            continue
        return RecurrenceSpec(a, b, c, a0, a1)


def sweep(
    seed: int,
    n: int,
    box: ParamBox = ParamBox(),
    m_values: tuple[int, ...] = (50, 100),
    boundary_rel_tol: float = 1e-8,
) -> SweepReport:
    """Classify and verify n seeded random instances.

    Instances outside every regime are recorded without judgment;
    Overflow/NoConvergence failures are recorded and excluded from the
    violation tallies.  Identical seeds give identical reports.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for m in m_values:
        _check_m(m)
    rng = np.random.default_rng(seed)
    counts = {t.value: 0 for t in Theorem}
    violating = {t.value: 0 for t in Theorem}
    worst = {t.value: 0.0 for t in Theorem}
    outside: list[InstanceNote] = []
    failures: list[InstanceNote] = []

    for i in range(n):
        spec = sample_spec(rng, box)
        char = characteristic(spec)
        classification = classify(spec, char)
        label = classification.theorem.value
        counts[label] += 1
        try:
            records = [
                _judge_one_m(
                    classification,
                    find_roots(taylor_poly(spec, m).coeffs),
                    m,
                    boundary_rel_tol,
                )
                for m in sorted(m_values)
            ]
        except (Overflow, NoConvergence) as exc:
            failures.append(InstanceNote(i, spec.as_tuple(), label, exc.code))
            continue
        if classification.theorem is Theorem.NONE:
            detail = "; ".join(
                f"m={r.m}: inside={r.disk_count.inside} on={r.disk_count.on_boundary} "
                f"outside={r.disk_count.outside}"
                for r in records
            )
            outside.append(InstanceNote(i, spec.as_tuple(), label, detail))
            continue
        # a violation is a root on the forbidden side of the circle, net of
        # the allowed exceptional zero; an instance whose exceptional zero
        # has not yet moved inside at these m (thin predicate margin) shows
        # up through `passed`/empirical_threshold instead
        if any(r.violations for r in records):
            violating[label] += 1
            magnitude = max(
                _violation_magnitude(r, classification.critical_radius) for r in records
            )
            worst[label] = max(worst[label], magnitude)

    by_theorem = {
        label: TheoremStats(counts[label], violating[label], worst[label])
        for label in counts
    }
    return SweepReport(
        seed=seed,
        n_instances=n,
        m_values=tuple(sorted(m_values)),
        by_theorem=by_theorem,
        samples_outside_hypotheses=tuple(outside),
        failures=tuple(failures),
    )
