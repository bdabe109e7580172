"""
Santalo points
==============

The Santalo point minimises the volume of the polar body over all
translations.  Simplices and centrally symmetric polytopes are solved in
closed form; everything else goes through Newton's method followed by
exact rational polishing.
"""
from fractions import Fraction

from toricvol.polytope import convex_hull, iterated_pyramid_over_square, standard_simplex
from toricvol.santalo import polar_volume_at, santalo_point

for n in range(1, 5):
    res = santalo_point(standard_simplex(n))
    print(f"simplex n={n}: point {[str(x) for x in res.point]}, Mahler volume {res.mahler}")

pyr = iterated_pyramid_over_square(3)
res = santalo_point(pyr)
print("pyramid over the square:", [str(x) for x in res.point], res.mahler, "exact:", res.exact)

# A lopsided quadrilateral: the point is irrational, so the answer is a
# rational approximation with a residual and a bracket.
Q = convex_hull([(0, 0), (5, 0), (0, 2), (1, 2)])
res = santalo_point(Q)
print("quadrilateral point:", [float(x) for x in res.point])
print("residual:", res.residual, "iterations:", res.iterations)
print("Mahler bracket:", [float(x) for x in res.mahler_bracket])

# The value never beats the minimum: try a few other centres.
for x in [(1, 1), (2, 1), (1.5, 0.8)]:
    x = tuple(Fraction(c) for c in x)
    print("  dual volume at", [float(c) for c in x], "=", float(polar_volume_at(Q, x)))
print("  minimum             =", float(res.dual_volume))
