"""
Normalized volumes of toric singularities
=========================================

A cone given by ray generators is split as cone(P x {ell}); its normalized
volume is (d-1)!/ell times the volume of the polar of P about its Santalo
point.
"""
from toricvol.polytope import cube, standard_simplex
from toricvol.toric import (
    cone_from_rays,
    cone_over,
    cross_check,
    gorenstein_data,
    height_polytope,
    normalized_volume,
    weight_volume,
)

examples = {
    "A1 surface": cone_from_rays([(1, 0), (1, 2)]),
    "1/3(1,1)": cone_from_rays([(1, 0), (-1, 3)]),
    "quadric 3-fold": cone_over(cube(2).vertices),
    "smooth 4-fold": cone_over(standard_simplex(3).vertices),
    "dP6-like cone": cone_over([(0, 0), (1, 0), (0, 1), (2, 1)]),
}

for name, cone in examples.items():
    g = gorenstein_data(cone)
    hp = height_polytope(cone)
    nv = normalized_volume(cone)
    print(f"{name:15s} index {g.index}  P vertices {[tuple(int(x) for x in v) for v in hp.P.vertices]}")
    print(f"{'':15s} vol^ = {nv.value if nv.exact else float(nv.value)}"
          f"  (exact: {nv.exact})  xi = {[float(x) for x in nv.minimizer_xi]}")
    check = cross_check(cone, nv)
    print(f"{'':15s} dual-side check agrees: {check['agrees']}, local min: {check['local_minimum']}")

# The weight valuation (origin of P) gives an upper bound.
cross = cone_over([(1, 0), (-1, 0), (0, 1), (0, -1)])
print("cross-polytope cone: weight", weight_volume(cross), "vol^", normalized_volume(cross).value)
