"""JSON-ready dict views of the report types.

Field names follow the library's type fields one-to-one so reports can
be consumed from other languages without a mapping layer.  Complex
numbers serialize as {"re": ..., "im": ...}.
"""

from __future__ import annotations

from .classifier import Classification
from .recurrence import RecurrenceSpec
from .rootfinder import DiskCount, RootSet
from .verifier import (
    CircleDistanceStat,
    InstanceNote,
    PerMRecord,
    SweepReport,
    VerificationReport,
)


def complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def spec_json(spec: RecurrenceSpec) -> dict:
    return {"a": spec.a, "b": spec.b, "c": spec.c, "a0": spec.a0, "a1": spec.a1}


def rootset_json(rs: RootSet) -> dict:
    return {
        "roots": [complex_json(z) for z in rs.roots],
        "residuals": list(rs.residuals),
        "degree": rs.degree,
        "trailing_zero_multiplicity": rs.trailing_zero_multiplicity,
    }


def disk_count_json(dc: DiskCount) -> dict:
    return {
        "inside": dc.inside,
        "on_boundary": dc.on_boundary,
        "outside": dc.outside,
        "boundary_tolerance": dc.boundary_tolerance,
    }


def classification_json(cl: Classification) -> dict:
    return {
        "theorem": cl.theorem.value,
        "critical_radius": cl.critical_radius,
        "predicted_locus": cl.predicted_locus.value,
        "exceptional_zero_predicted": cl.exceptional_zero_predicted,
        "hypothesis_trace": [
            {"condition": h.condition, "value": h.value, "satisfied": h.satisfied}
            for h in cl.hypothesis_trace
        ],
    }


def _per_m_json(record: PerMRecord) -> dict:
    return {
        "m": record.m,
        "disk_count": disk_count_json(record.disk_count),
        "violations": [complex_json(z) for z in record.violations],
        "exceptional_found": record.exceptional_found,
        "max_residual": record.max_residual,
        "passed": record.passed,
    }


def _circle_stat_json(stat: CircleDistanceStat) -> dict:
    return {
        "m": stat.m,
        "median_distance": stat.median_distance,
        "max_distance_of_closest_80pct": stat.max_distance_of_closest_80pct,
    }


def verification_report_json(report: VerificationReport) -> dict:
    return {
        "spec": spec_json(report.spec),
        "classification": classification_json(report.classification),
        "per_m": [_per_m_json(r) for r in report.per_m],
        "empirical_threshold": report.empirical_threshold,
        "circle_distance_stats": [_circle_stat_json(s) for s in report.circle_distance_stats],
    }


def _note_json(note: InstanceNote) -> dict:
    return {
        "index": note.index,
        "params": list(note.params),
        "theorem": note.theorem,
        "detail": note.detail,
    }


def sweep_report_json(report: SweepReport) -> dict:
    return {
        "seed": report.seed,
        "n_instances": report.n_instances,
        "m_values": list(report.m_values),
        "by_theorem": {
            label: {
                "count": stats.count,
                "n_violating_instances": stats.n_violating_instances,
                "worst_violation_magnitude": stats.worst_violation_magnitude,
            }
            for label, stats in report.by_theorem.items()
        },
        "samples_outside_hypotheses": [_note_json(n) for n in report.samples_outside_hypotheses],
        "failures": [_note_json(n) for n in report.failures],
    }
