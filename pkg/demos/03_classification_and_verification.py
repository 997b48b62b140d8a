"""Classify parameter tuples and verify the predicted zero locus.

Three sign regimes admit a clean one-sided answer.  The classifier
evaluates the hypotheses and predicts the locus; the verifier roots the
sections and checks the prediction, reporting the least m from which
the tested range behaves asymptotically.
"""

from taylorzeros import (
    characteristic,
    classify,
    find_threshold_m,
    validate,
    verify_instance,
)

EXAMPLES = [
    (5, 1, -1, 1, -3),  # zeros outside the open ball, one exception inside
    (2, 1, -1, 2, 1),  # zeros outside the open ball, no exception
    (2, 5, 3, 1, -2),  # zeros inside the closed ball
    (2, -3, 1, 2, 5),  # zeros inside the closed ball (tighter hypotheses)
    (1, 1, 1, 1, 1),  # complex characteristic roots: no prediction
]

for params in EXAMPLES:
    spec = validate(*params)
    cl = classify(spec, characteristic(spec))
    print(f"{params}: {cl.theorem.value:4s} locus={cl.predicted_locus.value}"
          f" r*={cl.critical_radius:.4f} exceptional={cl.exceptional_zero_predicted}")
    for h in cl.hypothesis_trace:
        print(f"    {h.condition:35s} value={h.value:+.4e} -> {h.satisfied}")

print("\nverifying (5, 1, -1, 1, -3) at m in {10, 25, 50, 100}:")
report = verify_instance(validate(5, 1, -1, 1, -3), (10, 25, 50, 100))
for rec in report.per_m:
    print(f"  m={rec.m:3d} passed={rec.passed} exceptional_found={rec.exceptional_found}"
          f" inside/on/outside={rec.disk_count.inside}/{rec.disk_count.on_boundary}/{rec.disk_count.outside}")
print("empirical threshold over the tested range:", report.empirical_threshold)

print("\nexhaustive threshold search up to m=40:",
      find_threshold_m(validate(2, 5, 3, 1, -2), 40))
