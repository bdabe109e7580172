"""Q-Gorenstein toric singularities and their normalized volume.

A singularity is given by the primitive ray generators of a pointed,
full-dimensional rational cone ``sigma`` in ``N = Z^d``.  If it is
Q-Gorenstein with index ``ell``, a unimodular change of coordinates puts all
rays at height ``ell``, i.e. ``sigma = cone(P x {ell})`` for a lattice
polytope ``P`` of dimension ``d - 1``.  The normalized volume is then

    vol^(X) = (d - 1)! / ell * vol((P - chi)*)

with ``chi`` the Santaló point of ``P``.
"""
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from . import linalg
from .errors import (
    AmbiguousU,
    NotFullDimensional,
    NotPointed,
    NotQGorenstein,
    OriginNotInterior,
    Unbounded,
)
from .normalform import configuration_key, encode_key
from .polytope import UnimodularMap, convex_hull, vector, volume
from .santalo import DEFAULT_TOL, SantaloResult, polar_volume_at, santalo_point


@dataclass(frozen=True)
class ToricCone:
    dim: int
    rays: tuple
    label: str = None
    facet_normals: tuple = ()

    def is_smooth(self):
        return len(self.rays) == self.dim and abs(linalg.det(self.rays)) == 1


@dataclass(frozen=True)
class GorensteinData:
    u: tuple
    index: int


@dataclass(frozen=True)
class HeightPolytope:
    P: object
    ell: int
    splitting: UnimodularMap


@dataclass(frozen=True)
class NormalizedVolumeResult:
    value: Fraction
    value_bracket: tuple
    minimizer_xi: tuple
    santalo: SantaloResult
    height: HeightPolytope

    @property
    def exact(self):
        return self.santalo.exact


def _is_pointed(rays):
    r = linalg.rank(rays)
    basis = []
    for v in rays:
        if linalg.rank(basis + [list(v)]) > len(basis):
            basis.append(list(v))
    cols = [list(c) for c in zip(*basis)]
    coords = [tuple(linalg.solve(cols, v)) for v in rays]
    if r == 1:
        return all(c[0] > 0 for c in coords) or all(c[0] < 0 for c in coords)
    origin = (Fraction(0),) * r
    hull = convex_hull([origin] + coords)
    return origin in hull.vertices


def _cone_facets(rays, d):
    hull = convex_hull([(0,) * d] + list(rays))
    return tuple(tuple(-a for a in h.normal) for h in hull.facets if h.offset == 0)


def cone_from_rays(rays, label=None):
    """Validate ray generators and build a :class:`ToricCone`.

    Rays are made primitive; duplicates and non-extremal rays are dropped
    (the latter with a warning).
    """
    prim = []
    for v in rays:
        p = linalg.primitive(v)
        if p not in prim:
            prim.append(p)
    d = len(prim[0])
    if not _is_pointed(prim):
        raise NotPointed("cone contains a line")
    if linalg.rank(prim) < d:
        raise NotFullDimensional(f"rays do not span {d}-space")
    normals = _cone_facets(prim, d)
    kept = []
    for v in prim:
        tight = [a for a in normals if linalg.dot(a, v) == 0]
        if linalg.rank(tight) == d - 1 if tight else d == 1:
            kept.append(v)
        else:
            warnings.warn(f"ray {v} is not extremal and was removed", stacklevel=2)
    return ToricCone(d, tuple(kept), label, normals)


def gorenstein_data(cone):
    rows = [list(v) for v in cone.rays]
    if linalg.rank(rows) < cone.dim:
        raise AmbiguousU("rays do not determine u")
    u = linalg.solve(rows, [1] * len(rows))
    if u is None:
        raise NotQGorenstein("no u with <u, v> = 1 on every ray")
    ell = 1
    for x in u:
        ell = linalg.lcm(ell, x.denominator)
    return GorensteinData(tuple(u), ell)


def height_polytope(cone):
    """Coordinates on ``N`` in which every ray sits at height ``ell``.

    Cones already written as ``cone(P x {ell})`` (last coordinate constant)
    keep their coordinates; otherwise the height functional ``ell * u`` is
    completed to a unimodular matrix.
    """
    g = gorenstein_data(cone)
    m = [int(x * g.index) for x in g.u]
    d = cone.dim
    if m == [0] * (d - 1) + [1]:
        matrix = [[int(i == j) for j in range(d)] for i in range(d)]
    else:
        matrix = linalg.complete_to_unimodular(m)
    T = UnimodularMap(matrix)
    images = [T(v) for v in cone.rays]
    assert all(w[-1] == g.index for w in images)
    P = convex_hull([w[:-1] for w in images])
    return HeightPolytope(P, g.index, T)


def dual_cone(cone):
    return cone_from_rays(cone.facet_normals)


def truncated_volume(cone, xi):
    """``d! * vol({y in sigma^dual : <xi, y> <= 1})`` (exact)."""
    xi = vector(xi)
    pts = [(Fraction(0),) * cone.dim]
    for r in cone.facet_normals:
        t = linalg.dot(xi, r)
        if t <= 0:
            raise Unbounded("xi is not in the interior of the cone")
        pts.append(tuple(Fraction(a) / t for a in r))
    return volume(convex_hull(pts)) * factorial(cone.dim)


def normalized_volume(cone, tol=DEFAULT_TOL):
    hp = height_polytope(cone)
    d, ell = cone.dim, hp.ell
    res = santalo_point(hp.P, tol)
    scale = Fraction(factorial(d - 1), ell)
    value = scale * res.dual_volume
    lower = res.dual_volume_lower * mpmath.mpf(scale.numerator) / scale.denominator
    xi = hp.splitting.inverse()(tuple(res.point) + (Fraction(ell),))
    return NormalizedVolumeResult(value, (lower, value), xi, res, hp)


def weight_volume(cone, xi0=None):
    """Volume of the weight valuation ``xi0`` (default: height-coordinate origin)."""
    hp = height_polytope(cone)
    T = hp.splitting
    if xi0 is None:
        center = (Fraction(0),) * (cone.dim - 1)
    else:
        image = T(vector(xi0))
        if image[-1] != hp.ell:
            raise ValueError("xi0 must satisfy <u, xi0> = 1")
        center = image[:-1]
    if not hp.P.contains(center, strict=True):
        raise OriginNotInterior("weight point is not interior to P")
    return Fraction(factorial(cone.dim - 1), hp.ell) * polar_volume_at(hp.P, center)


def cone_over(points, ell=1, label=None):
    """The cone over ``points x {ell}`` (rays are made primitive)."""
    return cone_from_rays([tuple(p) + (ell,) for p in points], label)


def cone_key(cone):
    """Canonical key of the cone up to GL(d, Z)."""
    pairing = [[linalg.dot(a, v) for v in cone.rays] for a in cone.facet_normals]
    return encode_key("C", cone.dim, configuration_key(cone.rays, pairing, affine=False))


def cross_check(cone, result, delta=Fraction(1, 1000)):
    """Independent check of a :class:`NormalizedVolumeResult` on the dual side.

    Recomputes the truncated dual-cone volume at the minimiser and at
    perturbations within ``<u, xi> = 1``; the first must equal the value and
    none of the others may be smaller.
    """
    u = gorenstein_data(cone).u
    xi = result.minimizer_xi
    at_xi = truncated_volume(cone, xi)
    worst = None
    for direction in linalg.nullspace([list(u)], cone.dim):
        for sign in (1, -1):
            trial = tuple(a + sign * delta * b for a, b in zip(xi, direction))
            try:
                v = truncated_volume(cone, trial)
            except Unbounded:
                continue
            worst = v if worst is None else min(worst, v)
    agrees = at_xi == result.value
    is_local_min = worst is None or worst >= result.value
    return {"truncated_volume_at_xi": at_xi, "agrees": agrees,
            "min_perturbed": worst, "local_minimum": is_local_min}
