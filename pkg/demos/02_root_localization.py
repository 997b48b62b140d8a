"""Find all zeros of a section polynomial and count them against a disk.

The finder refines every zero simultaneously and certifies each one
with a residual bound, so the disk counts below are trustworthy to the
stated boundary tolerance.
"""

from taylorzeros import characteristic, count_in_disk, find_roots, taylor_poly, validate

spec = validate(5, 1, -1, 1, -3)
char = characteristic(spec)
print("critical radius r* =", char.critical_radius)

for m in (10, 25, 50):
    rs = find_roots(taylor_poly(spec, m).coeffs)
    dc = count_in_disk(rs, char.critical_radius)
    print(
        f"m={m:3d}: {dc.inside} inside, {dc.on_boundary} on, {dc.outside} outside"
        f"  (worst residual {max(rs.residuals):.2e})"
    )

# exactly one zero sits strictly inside the critical ball for this
# parameter choice, and it converges to -c*a0/(c*a1 + b*a0) = 1/4
rs = find_roots(taylor_poly(spec, 50).coeffs)
inner = min(rs.roots, key=abs)
print("\ninnermost zero at m=50:", inner)
limit = -spec.c * spec.a0 / (spec.c * spec.a1 + spec.b * spec.a0)
print("limit position:", limit)
