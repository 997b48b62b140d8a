"""Sample the comparison inequality and watch zeros approach the circle.

The one-sided locus statements rest on a dominance inequality between
two sides of a closed-form split, sampled here on circles just off
|z| = t2.  A positive margin certifies strict dominance at the sampled
points; the margin grows geometrically with m.  The second half
measures how the zeros crowd toward the critical circle.
"""

from taylorzeros import (
    Regime,
    characteristic,
    circle_convergence,
    default_epsilon,
    rouche_margin,
    validate,
)

spec = validate(5, 1, -1, 1, -3)
char = characteristic(spec)
eps = default_epsilon(char)
print(f"sampling window epsilon = {eps}")
for m in (25, 50, 100, 200):
    margin = rouche_margin(char, m, eps, 256, Regime.AC_NEG)
    print(f"  m={m:3d}  worst margin on |z| = t2 + eps: {margin:.6e}")

print("\nthe two inside-the-ball regimes sample on |z| = t2 - eps:")
for params, regime in [
    ((2, 5, 3, 1, -2), Regime.AC_POS_CD_NONNEG),
    ((2, -3, 1, 2, 5), Regime.AC_POS_CD_NEG),
]:
    ch = characteristic(validate(*params))
    margin = rouche_margin(ch, 100, None, 256, regime)
    print(f"  {params} {regime.value}: margin {margin:.6e}")

print("\ndistance of section zeros to the critical circle (should shrink):")
for m_stat in circle_convergence(validate(2, 5, 3, 1, -2), (20, 40, 80, 160)):
    print(f"  m={m_stat.m:3d}  median={m_stat.median_distance:.5f}"
          f"  closest-80%-max={m_stat.max_distance_of_closest_80pct:.5f}")
