"""Exact rational polytopes: hulls, polar duals, volumes, barycenters.

A vector is a tuple of :class:`fractions.Fraction`.  A :class:`Polytope`
always carries both representations, with vertices sorted
lexicographically and facet normals scaled to primitive integer vectors.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

import mpmath

from . import linalg
from .errors import DegenerateInput, NotLattice, OriginNotInterior
from .normalform import configuration_key, encode_key


def vector(coords):
    return tuple(Fraction(x) for x in coords)


@dataclass(frozen=True)
class Halfspace:
    """The set ``{x : <normal, x> <= offset}``."""

    normal: tuple
    offset: Fraction

    def value(self, x):
        return linalg.dot(self.normal, x)

    def slack(self, x):
        return self.offset - self.value(x)


def _halfspace(normal, offset):
    """Rescale so that ``normal`` is a primitive integer vector."""
    normal = [Fraction(a) for a in normal]
    prim = linalg.primitive(normal)
    i = next(i for i, a in enumerate(prim) if a)
    scale = normal[i] / prim[i]
    return Halfspace(prim, Fraction(offset) / scale)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple
    facets: tuple
    facet_vertices: tuple = field(repr=False, compare=False)

    @property
    def is_lattice(self):
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def __len__(self):
        return len(self.vertices)

    def contains(self, x, strict=False):
        if strict:
            return all(h.slack(x) > 0 for h in self.facets)
        return all(h.slack(x) >= 0 for h in self.facets)

    def is_simplex(self):
        return len(self.vertices) == self.dim + 1

    def vertex_facets(self, i):
        return [j for j, fv in enumerate(self.facet_vertices) if i in fv]


def _make_polytope(vertices, halfspaces):
    order = sorted(range(len(vertices)), key=lambda i: vertices[i])
    verts = tuple(tuple(vertices[i]) for i in order)
    facets = tuple(sorted(set(halfspaces), key=lambda h: (h.normal, h.offset)))
    incidence = tuple(
        frozenset(i for i, v in enumerate(verts) if h.slack(v) == 0) for h in facets
    )
    return Polytope(len(verts[0]), verts, facets, incidence)


@dataclass(frozen=True)
class UnimodularMap:
    """``x -> matrix @ x + shift`` with an integer matrix of determinant +-1."""

    matrix: tuple
    shift: tuple = None

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        shift = self.shift if self.shift is not None else (0,) * len(m)
        object.__setattr__(self, "shift", vector(shift))
        if abs(linalg.det(m)) != 1:
            raise ValueError("matrix is not unimodular")

    def __call__(self, x):
        return tuple(a + s for a, s in zip(linalg.matvec(self.matrix, x), self.shift))

    def inverse(self):
        inv = tuple(tuple(int(x) for x in row) for row in linalg.inverse(self.matrix))
        return UnimodularMap(inv, tuple(-a for a in linalg.matvec(inv, self.shift)))


@dataclass(frozen=True)
class Triangulation:
    points: tuple
    simplices: tuple

    def volumes(self):
        return [simplex_volume([self.points[i] for i in s]) for s in self.simplices]


def simplex_volume(points):
    p0 = points[0]
    n = len(p0)
    rows = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return abs(linalg.det(rows)) / factorial(n)


# -- convex hull -----------------------------------------------------------


def _hull_1d(pts):
    lo, hi = min(pts), max(pts)
    return [lo, hi], [Halfspace((1,), hi[0]), Halfspace((-1,), -lo[0])]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts):
    pts = sorted(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    facets = []
    for p, q in zip(ring, ring[1:] + ring[:1]):
        normal = (q[1] - p[1], p[0] - q[0])
        facets.append(_halfspace(normal, linalg.dot(normal, p)))
    return ring, facets


def _plane_through(points, inside):
    n = len(points[0])
    rows = [list(p) + [Fraction(-1)] for p in points]
    kernel = linalg.nullspace(rows, n + 1)
    if len(kernel) != 1:
        raise ArithmeticError("ridge does not determine a hyperplane")
    a, b = kernel[0][:n], kernel[0][n]
    if linalg.dot(a, inside) > b:
        a, b = [-x for x in a], -b
    return _halfspace(a, b)


def _hull_nd(pts):
    n = len(pts[0])
    simplex = [0]
    for i in range(1, len(pts)):
        if linalg.affine_rank([pts[j] for j in simplex] + [pts[i]]) == len(simplex):
            simplex.append(i)
            if len(simplex) == n + 1:
                break
    inside = tuple(sum(pts[i][k] for i in simplex) / (n + 1) for k in range(n))
    facets = {}
    for sub in combinations(simplex, n):
        h = _plane_through([pts[i] for i in sub], inside)
        facets[h] = set(sub)
    rest = [i for i in range(len(pts)) if i not in simplex]
    for i in rest:
        p = pts[i]
        visible, coplanar, hidden = [], [], []
        for h in facets:
            s = h.slack(p)
            (visible if s < 0 else coplanar if s == 0 else hidden).append(h)
        for h in coplanar:
            facets[h].add(i)
        if not visible:
            continue
        created = {}
        for f in visible:
            fpts = facets[f]
            for g in hidden:
                common = fpts & facets[g]
                if len(common) < n - 1:
                    continue
                if linalg.affine_rank([pts[j] for j in common]) != n - 2:
                    continue
                h = _plane_through([pts[j] for j in common] + [p], inside)
                created.setdefault(h, set()).update(common | {i})
        for f in visible:
            del facets[f]
        for h, members in created.items():
            facets.setdefault(h, set()).update(members)
    # boundary points that are not extreme are dropped here
    used = sorted(set().union(*facets.values()))
    verts = []
    for i in used:
        normals = [h.normal for h, m in facets.items() if i in m]
        if linalg.rank(normals) == n:
            verts.append(pts[i])
    return verts, list(facets)


def convex_hull(points):
    """Exact convex hull of a full-dimensional finite point set."""
    pts = sorted({vector(p) for p in points})
    if not pts:
        raise DegenerateInput("empty point set")
    n = len(pts[0])
    if linalg.affine_rank(pts) < n:
        raise DegenerateInput(f"points do not span {n}-space")
    if n == 1:
        verts, facets = _hull_1d(pts)
    elif n == 2:
        verts, facets = _hull_2d(pts)
    else:
        verts, facets = _hull_nd(pts)
    return _make_polytope(verts, facets)


# -- duality, maps --------------------------------------------------------


def polar_dual_with_map(P):
    """Polar dual together with the facet -> dual-vertex index map."""
    if any(h.offset <= 0 for h in P.facets):
        raise OriginNotInterior("origin is not strictly interior")
    dual_pts = [tuple(Fraction(a) / h.offset for a in h.normal) for h in P.facets]
    dual_facets = [_halfspace(v, 1) for v in P.vertices]
    Q = _make_polytope(dual_pts, dual_facets)
    index = {v: i for i, v in enumerate(Q.vertices)}
    return Q, [index[p] for p in dual_pts]


def polar_dual(P):
    return polar_dual_with_map(P)[0]


def translate(P, x):
    x = vector(x)
    verts = [tuple(a + b for a, b in zip(v, x)) for v in P.vertices]
    facets = [Halfspace(h.normal, h.offset + h.value(x)) for h in P.facets]
    return _make_polytope(verts, facets)


def apply_map(P, T):
    inv_t = list(zip(*linalg.inverse(T.matrix)))
    verts = [T(v) for v in P.vertices]
    facets = []
    for h in P.facets:
        a = tuple(int(x) for x in linalg.matvec(inv_t, h.normal))
        facets.append(Halfspace(a, h.offset + linalg.dot(a, T.shift)))
    return _make_polytope(verts, facets)


# -- triangulation, volume, barycenter --------------------------------------


def _facets_of_face(face, facet_sets):
    subs = {face & F for F in facet_sets if not face <= F}
    return [s for s in subs if not any(s < t for t in subs)]


def pulling_triangulation(face, k, facet_sets, memo=None):
    """Simplices (sorted index tuples) of the pulling triangulation of a face.

    ``face`` is a frozenset of vertex indices of dimension ``k``; the vertex
    with the smallest index is pulled first.  Only the vertex-facet
    incidences are used, so the result is purely combinatorial.
    """
    if memo is None:
        memo = {}
    if face in memo:
        return memo[face]
    if len(face) == k + 1:
        result = [tuple(sorted(face))]
    else:
        apex = min(face)
        result = []
        for sub in sorted(_facets_of_face(face, facet_sets), key=sorted):
            if apex in sub:
                continue
            result.extend((apex,) + s for s in pulling_triangulation(sub, k - 1, facet_sets, memo))
    memo[face] = result
    return result


def triangulate(P):
    full = frozenset(range(len(P.vertices)))
    simplices = pulling_triangulation(full, P.dim, P.facet_vertices)
    return Triangulation(P.vertices, tuple(simplices))


def volume(P):
    return sum(triangulate(P).volumes(), Fraction(0))


def lattice_volume(P):
    return volume(P) * factorial(P.dim)


def barycenter(P):
    tri = triangulate(P)
    total = Fraction(0)
    acc = [Fraction(0)] * P.dim
    for s, vol in zip(tri.simplices, tri.volumes()):
        total += vol
        for k in range(P.dim):
            acc[k] += vol * sum(tri.points[i][k] for i in s) / (P.dim + 1)
    return tuple(a / total for a in acc)


def vertex_centroid(P):
    m = len(P.vertices)
    return tuple(sum(v[k] for v in P.vertices) / m for k in range(P.dim))


def symmetry_center(P):
    """Center of central symmetry, or ``None`` if ``P`` is not symmetric."""
    c = vertex_centroid(P)
    verts = set(P.vertices)
    for v in P.vertices:
        if tuple(2 * a - b for a, b in zip(c, v)) not in verts:
            return None
    return c


def diameter(P):
    best = 0.0
    for u, v in combinations(P.vertices, 2):
        best = max(best, sum(float(a - b) ** 2 for a, b in zip(u, v)))
    return best ** 0.5


def lattice_points(P, strict=False):
    """All integer points of ``P`` (or of its interior)."""
    import itertools
    import math

    lo = [math.ceil(min(v[k] for v in P.vertices)) for k in range(P.dim)]
    hi = [math.floor(max(v[k] for v in P.vertices)) for k in range(P.dim)]
    out = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if P.contains(x, strict=strict):
            out.append(tuple(Fraction(c) for c in x))
    return out


def is_reflexive(P):
    if not P.is_lattice:
        return False
    try:
        return polar_dual(P).is_lattice
    except OriginNotInterior:
        return False


# -- canonical form ----------------------------------------------------------


def pairing_matrix(P):
    return [[int(h.slack(v)) for v in P.vertices] for h in P.facets]


def _normal_form_hnf(P):
    if not P.is_lattice:
        raise NotLattice("normal form requires a lattice polytope")
    if P.dim == 1:
        return ((int(P.vertices[1][0] - P.vertices[0][0]),),)
    points = [tuple(int(x) for x in v) for v in P.vertices]
    return configuration_key(points, pairing_matrix(P), affine=True)


def normal_form(P):
    """Canonical key of a lattice polytope up to affine unimodular maps."""
    return encode_key("P", P.dim, _normal_form_hnf(P))


def canonical_representative(P):
    """The lattice polytope whose vertices are the columns of the normal form."""
    h = _normal_form_hnf(P)
    if P.dim == 1:
        return convex_hull([(0,), h[0]])
    return convex_hull(list(zip(*h)))


def unit_ball_volume(n, dps=40):
    """Volume of the Euclidean unit ball in dimension ``n`` as an mpmath float."""
    with mpmath.workdps(dps):
        return +(mpmath.pi ** (mpmath.mpf(n) / 2) / mpmath.gamma(mpmath.mpf(n) / 2 + 1))


def standard_simplex(n):
    pts = [[0] * n] + [[int(i == j) for j in range(n)] for i in range(n)]
    return convex_hull(pts)


def cube(n, lo=0, hi=1):
    import itertools

    return convex_hull(list(itertools.product((lo, hi), repeat=n)))


def iterated_pyramid_over_square(n):
    """conv(unit square x {0} together with e_3, ..., e_n)."""
    pts = []
    for a in (0, 1):
        for b in (0, 1):
            pts.append([a, b] + [0] * (n - 2))
    for k in range(2, n):
        pts.append([int(j == k) for j in range(n)])
    return convex_hull(pts)


__all__ = [
    "Halfspace", "Polytope", "UnimodularMap", "Triangulation", "vector",
    "convex_hull", "polar_dual", "polar_dual_with_map", "translate", "apply_map",
    "triangulate", "volume", "lattice_volume", "barycenter", "normal_form",
    "canonical_representative",
    "unit_ball_volume", "simplex_volume", "symmetry_center", "lattice_points",
    "is_reflexive", "standard_simplex", "cube", "iterated_pyramid_over_square",
]
