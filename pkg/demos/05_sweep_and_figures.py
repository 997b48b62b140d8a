"""Seeded random sweeps and deterministic zero-scatter figures.

A sweep samples a parameter box (rejecting zero weights and
near-confluent quadratics), classifies every instance, and verifies
the applicable prediction on computed zeros.  Identical seeds give
bit-identical reports.  The figure writer emits plain SVG with a
reference circle; bytes are deterministic too.
"""

import pathlib

from taylorzeros import ParamBox, characteristic, find_roots, normalized_H, sweep, validate
from taylorzeros.svgfig import render_scatter_svg

report = sweep(seed=2026, n=200, box=ParamBox(), m_values=(50,))
print(f"sweep seed={report.seed}, {report.n_instances} instances at m={report.m_values}:")
for label, stats in report.by_theorem.items():
    print(f"  {label:4s} count={stats.count:4d} violating={stats.n_violating_instances}"
          f" worst={stats.worst_violation_magnitude:.2e}")
print(f"  recorded failures: {len(report.failures)}")
print(f"  instances outside every regime: {len(report.samples_outside_hypotheses)}")

# scatter the normalized zeros of one instance against the |z| = t2 circle
spec = validate(5, 1, -1, 1, -3)
char = characteristic(spec)
rs = find_roots(normalized_H(spec, 10).coeffs)
svg = render_scatter_svg(list(rs.roots), abs(char.t2), "H_10 zeros, circle |z| = t2")
out = pathlib.Path(__file__).with_name("h10_zeros.svg")
out.write_text(svg)
print(f"\nwrote {out}")
print("same picture from the command line:")
print("  taylorzeros figure --spec 5,1,-1,1,-3 --m 10 --target H --out h10_zeros.svg")
