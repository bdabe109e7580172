"""
Inequalities
============

Blaschke-Santalo, the rational double point bound, the volume/index bounds
with printed and proof-consistent constants, Euler characteristic bounds and
Radon partitions.
"""
from toricvol.bounds import (
    check_partition_inequality,
    euler_bound_report,
    partition_volume_bounds,
    radon_partitions,
    run_suite,
    verify_volume_index_bounds,
)
from toricvol.polytope import cube, iterated_pyramid_over_square
from toricvol.toric import cone_from_rays, cone_over


def show(reports):
    for r in reports:
        flag = "ok  " if r.holds else ("info" if r.advisory else "FAIL")
        print(f"  [{flag}] {r.name}: {r.lhs} vs {float(r.rhs):.6g}  {r.notes}")


quadric = cone_over(cube(2).vertices)
print("quadric cone, all suites")
show(run_suite(quadric))

# The printed constant is violated by the quadric; the proof-consistent one holds.
print("volume/index bounds")
show(verify_volume_index_bounds(quadric))

print("Radon partitions of the pyramid over the square")
pyr = iterated_pyramid_over_square(3)
for part in radon_partitions(pyr.vertices):
    print("  ", part.part_a, "|", part.part_b, "at", part.radon_point, (part.p, part.q))
show(partition_volume_bounds(pyr.vertices))
show([check_partition_inequality(p, 5 - p) for p in range(1, 5)])

print("A_(k-1) surfaces reach vol^ * chi = 4")
for k in range(1, 6):
    show(euler_bound_report(cone_from_rays([(0, 1), (k, 1)]))[:1])
