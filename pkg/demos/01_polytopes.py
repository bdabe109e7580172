"""
Exact polytopes
===============

Hulls, polar duals, volumes and normal forms, all in rational arithmetic.
"""
from fractions import Fraction

from toricvol.polytope import (
    UnimodularMap,
    apply_map,
    barycenter,
    convex_hull,
    lattice_volume,
    normal_form,
    polar_dual,
    translate,
    volume,
)


def fmt(points):
    if points and isinstance(points[0], tuple):
        return [fmt(p) for p in points]
    return "(" + ", ".join(str(x) for x in points) + ")"


# A triangle with a redundant point on its boundary.
T = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1)])
print("vertices:", fmt(T.vertices))
for h in T.facets:
    print("  facet", h.normal, "<=", h.offset)

# Centre it at its barycenter and take the polar dual.
b = barycenter(T)
print("barycenter:", fmt(b))
D = polar_dual(translate(T, tuple(-x for x in b)))
print("dual vertices:", fmt(D.vertices))
print("vol(T) * vol(dual) =", volume(T) * volume(D))

# Lattice volume is n! times the Euclidean volume.
print("lattice volume of T:", lattice_volume(T))

# Normal forms identify polytopes up to affine unimodular maps.
S = apply_map(T, UnimodularMap([[2, 1], [1, 1]], (4, -7)))
print("image vertices:", fmt(S.vertices))
print("same normal form:", normal_form(S) == normal_form(T))
print(normal_form(T).decode())

# Rational input is fine; lattice-only operations refuse it.
R = convex_hull([(Fraction(1, 2), 0), (0, Fraction(1, 3)), (-1, -1)])
print("rational triangle volume:", volume(R))
