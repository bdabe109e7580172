"""Radon partitions and verifiers for the volume inequalities.

Every verifier returns :class:`BoundReport` objects comparing a left-hand
side against a right-hand side.  Reports marked ``advisory`` record a
constant or hypothesis that is known not to apply; they are informational
and never count as violations.
"""
import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, factorial

import mpmath

from . import linalg
from .errors import DegenerateSpan, OriginNotInterior, WrongCount
from .polytope import (
    barycenter,
    convex_hull,
    cube,
    is_reflexive,
    lattice_volume,
    normal_form,
    polar_dual,
    translate,
    unit_ball_volume,
    vector,
    volume,
)
from .santalo import DEFAULT_TOL, santalo_point
from .toric import height_polytope, normalized_volume, weight_volume

EQUALITY_TOL = 1e-7


@dataclass(frozen=True)
class RadonPartition:
    part_a: tuple
    part_b: tuple
    radon_point: tuple
    p: int
    q: int


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: object
    rhs: object
    holds: bool
    strict: bool
    equality_within_tol: bool
    notes: str = ""
    advisory: bool = False


def _highprec(func):
    """Run ``func`` with 40 significant digits for the mpmath constants."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        with mpmath.workdps(40):
            return func(*args, **kwargs)
    return wrapper


def _mp(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def compare(name, lhs, rhs, strict, notes="", advisory=False, tol=EQUALITY_TOL):
    """Build a report for ``lhs < rhs`` (strict) or ``lhs <= rhs`` (up to ``tol``)."""
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        diff = Fraction(rhs) - Fraction(lhs)
        scale = max(1, abs(Fraction(rhs)))
        equal = abs(diff) <= Fraction(tol).limit_denominator(10 ** 12) * scale
        holds = diff > 0 if strict else diff >= 0
    else:
        with mpmath.workdps(40):
            a, b = _mp(lhs), _mp(rhs)
            scale = max(1, abs(b))
            equal = abs(b - a) <= tol * scale
            holds = a < b if strict else a <= b + tol * scale
    return BoundReport(name, lhs, rhs, bool(holds), strict, bool(equal), notes, advisory)


# -- Radon partitions --------------------------------------------------------


def radon_partitions(points):
    """All splits of ``n + 2`` spanning points into two sets whose hulls meet."""
    pts = [vector(p) for p in points]
    n = len(pts[0])
    if len(pts) != n + 2:
        raise WrongCount(f"need exactly {n + 2} points in dimension {n}, got {len(pts)}")
    if linalg.affine_rank(pts) < n:
        raise DegenerateSpan("points do not affinely span")
    rows = [[p[k] for p in pts] for k in range(n)] + [[Fraction(1)] * len(pts)]
    (lam,) = linalg.nullspace(rows, len(pts))
    pos = [i for i, x in enumerate(lam) if x > 0]
    neg = [i for i, x in enumerate(lam) if x < 0]
    zero = [i for i, x in enumerate(lam) if x == 0]
    weight = sum(lam[i] for i in pos)
    point = tuple(sum(lam[i] * pts[i][k] for i in pos) / weight for k in range(n))
    found = set()
    for r in range(len(zero) + 1):
        for extra in combinations(zero, r):
            a = tuple(sorted(pos + list(extra)))
            b = tuple(sorted(i for i in range(len(pts)) if i not in a))
            if (len(a), a[0]) > (len(b), b[0]):
                a, b = b, a
            found.add((a, b))
    return [RadonPartition(a, b, point, len(a) - 1, len(b) - 1)
            for a, b in sorted(found, key=lambda ab: (len(ab[0]), ab))]


def minimal_p(points):
    return min(part.p for part in radon_partitions(points))


def partition_bound(p, q):
    return Fraction((p + 1) ** p * (q + 1) ** (q + 1), factorial(p) * factorial(q))


def partition_volume_bounds(points, tol=DEFAULT_TOL):
    """Lower bound on ``vol(P)`` from the minimal partition and upper bound on ``vol(P^chi)``."""
    pts = [vector(p) for p in points]
    n = len(pts[0])
    parts = radon_partitions(pts)
    p = min(part.p for part in parts)
    P = convex_hull(pts)
    vol = volume(P)
    lower = compare("partition_volume_lower", Fraction(p + 1, factorial(n)), vol, False,
                    f"minimal p = {p}")
    candidates = [part for part in parts if part.p >= 1]
    if not candidates:
        upper = compare("partition_dual_upper", Fraction(0), Fraction(0), False,
                        "no (p, q)-partition with p >= 1", advisory=True)
        return lower, upper
    p1 = min(part.p for part in candidates)
    best = [part for part in candidates if part.p == p1]
    q1 = n - p1
    res = santalo_point(P, tol)

    def centred(part):
        return all(_centroid([pts[i] for i in side]) == part.radon_point
                   for side in (part.part_a, part.part_b))

    at_barycentres = any(centred(part) for part in best)
    upper = compare("partition_dual_upper", res.dual_volume, partition_bound(p1, q1), False,
                    f"(p, q) = ({p1}, {q1}); radon point at both barycentres: {at_barycentres}")
    return lower, upper


def _centroid(pts):
    return tuple(sum(c) / len(pts) for c in zip(*pts))


def check_partition_inequality(p, q):
    n = p + q
    lhs = partition_bound(p, q)
    rhs = Fraction(2 * n ** (n + 1), factorial(n))
    return compare("partition_inequality", lhs, rhs, strict=p != 1,
                   notes=f"p={p}, q={q}, n={n}")


# -- Blaschke-Santaló and Mahler ---------------------------------------------


@_highprec
def verify_blaschke_santalo(P, tol=DEFAULT_TOL):
    n = P.dim
    omega2 = unit_ball_volume(n) ** 2
    b = barycenter(P)
    vol = volume(P)
    centred = vol * volume(polar_dual(translate(P, tuple(-x for x in b))))
    res = santalo_point(P, tol)
    report = compare("blaschke_santalo", centred, omega2, strict=n >= 2,
                     notes=f"santalo product {mpmath.nstr(_mp(res.mahler), 12)}")
    santalo_ok = _mp(res.mahler) <= _mp(centred) * (1 + EQUALITY_TOL)
    if not santalo_ok:
        report = BoundReport(report.name, report.lhs, report.rhs, False, report.strict,
                             report.equality_within_tol,
                             report.notes + "; santalo product exceeds barycentric product")
    return report


def mahler_lower_constant(n):
    return Fraction((n + 1) ** (n + 1), factorial(n) ** 2)


@_highprec
def verify_mahler_conjecture(P, tol=DEFAULT_TOL):
    res = santalo_point(P, tol)
    lower, _ = res.mahler_bracket
    rhs = res.mahler if res.exact else lower
    report = compare("mahler_conjecture", mahler_lower_constant(P.dim), rhs, strict=False,
                     notes="non-symmetric Mahler conjecture (open)")
    if not report.holds:
        report = BoundReport(report.name, report.lhs, report.rhs, False, False,
                             report.equality_within_tol,
                             "VIOLATION: would refute an open conjecture; "
                             "far more likely a solver bug")
    return report


# -- normalized volume bounds ------------------------------------------------


@_highprec
def verify_volume_index_bounds(cone, tol=DEFAULT_TOL):
    """Printed constants next to the constants obtained with the d! convention."""
    d = cone.dim
    nv = normalized_volume(cone, tol)
    hp = nv.height
    vol_p, ell, vhat = volume(hp.P), hp.ell, nv.value
    omega2 = unit_ball_volume(d - 1) ** 2
    vh = _mp(vhat)
    f1 = factorial(d - 1)
    strict = d >= 3
    gap = ("printed constant omits the factor (d-1)!*d relative to the d! normalisation; "
           "reported for reference only")
    return [
        compare("volume_bound_printed", vol_p, omega2 / (ell * d * vh), True, gap,
                advisory=True),
        compare("index_bound_printed", ell, f1 * omega2 / (d * vh), True, gap,
                advisory=True),
        compare("volume_bound", vol_p, omega2 * f1 / (ell * vh), strict,
                f"vol(P) >= 1/(d-1)!: {vol_p >= Fraction(1, f1)}"
                + ("" if strict else "; d=2 segments attain Blaschke-Santalo equality")),
        compare("index_bound", ell, f1 ** 2 * omega2 / vh, strict,
                "" if strict else "d=2 segments attain Blaschke-Santalo equality"),
    ]


def _equality_forms():
    return {
        (2, normal_form(convex_hull([(0,), (2,)]))),
        (3, normal_form(cube(2))),
    }


def verify_rdp_bound(cone, tol=DEFAULT_TOL):
    d = cone.dim
    nv = normalized_volume(cone, tol)
    if cone.is_smooth():
        return compare("rdp_bound", nv.value, d ** d, False,
                       "smooth point: excluded from the bound, calibration value d^d")
    rhs = 2 * (d - 1) ** d
    report = compare("rdp_bound", nv.value, rhs, False)
    hp = nv.height
    notes = []
    holds = report.holds and _mp(nv.value) < d ** d
    if report.equality_within_tol:
        key = (d, normal_form(hp.P))
        allowed = hp.ell == 1 and key in _equality_forms()
        notes.append(f"equality case; A1 normal form: {allowed}")
        holds = holds and allowed
    return BoundReport(report.name, report.lhs, report.rhs, holds, False,
                       report.equality_within_tol, "; ".join(notes))


# -- topological bounds -------------------------------------------------------


def _surface_resolution_length(cone):
    """Number of exceptional curves of the minimal resolution (d = 2)."""
    v1, v2 = cone.rays
    k = abs(v1[0] * v2[1] - v1[1] * v2[0])
    if k == 1:
        return 0
    _, s, t = linalg.xgcd(v1[0], v1[1])
    w1 = v1[1] * v2[0] - v1[0] * v2[1]
    w2 = s * v2[0] + t * v2[1]
    if w1 < 0:
        w1 = -w1
    q = (-w2) % k
    x, r = Fraction(k, q), 0
    while True:
        b = ceil(x)
        r += 1
        if b == x:
            return r
        x = 1 / (b - x)


def euler_characteristic(cone):
    """``(chi, exact)`` for a toric resolution.

    ``d = 2``: the minimal resolution.  ``d = 3``, Gorenstein: any crepant
    resolution (unimodular triangulation of ``P``, ``2 * area`` cells).
    Otherwise the lower bound ``(d-1)! vol(P)`` with ``exact = False``.
    """
    if cone.dim == 2:
        return _surface_resolution_length(cone) + 1, True
    hp = height_polytope(cone)
    lv = lattice_volume(hp.P)
    return int(lv), cone.dim == 3 and hp.ell == 1


@_highprec
def euler_bound_report(cone, tol=DEFAULT_TOL):
    d = cone.dim
    nv = normalized_volume(cone, tol)
    hp = nv.height
    chi, exact = euler_characteristic(cone)
    label = "exact" if exact else "proxy (d-1)!vol(P)"
    gorenstein = hp.ell == 1
    scope = "" if gorenstein else "; advisory: stated for Gorenstein cones only (ell > 1)"
    lower = nv.value if nv.exact else nv.value_bracket[0]
    reports = [
        compare("euler_conjecture", d ** d, _mp(lower) * chi if not nv.exact else lower * chi,
                False, f"chi={chi} ({label}){scope}", advisory=not gorenstein),
    ]
    omega2 = unit_ball_volume(d - 1) ** 2
    chi_crepant = int(lattice_volume(hp.P))
    f1 = factorial(d - 1)
    crepant_scope = "" if gorenstein else "; advisory: crepant resolutions need ell = 1"
    reports.append(compare(
        "euler_crepant_upper", nv.value, f1 ** 2 * omega2 / chi_crepant, d >= 3,
        f"chi <= (d-1)!vol(P) = {chi_crepant}{crepant_scope}", advisory=not gorenstein))
    reports.append(compare(
        "euler_crepant_upper_printed", nv.value, f1 * omega2 / chi_crepant, True,
        "printed constant (d-1)! omega^2 / chi; reported for reference only", advisory=True))
    return reports


def verify_c1_bound(cone, xi0=None, tol=DEFAULT_TOL):
    nv = normalized_volume(cone, tol)
    hp = nv.height
    if hp.ell != 1:
        return compare("c1_bound", nv.value, nv.value, False,
                       "not applicable: anti-canonical cones have ell = 1", advisory=True)
    wv = weight_volume(cone, xi0)
    center = (Fraction(0),) * (cone.dim - 1) if xi0 is None else \
        tuple(hp.splitting(vector(xi0))[:-1])
    dist = max(abs(float(a - b)) for a, b in zip(nv.santalo.point, center))
    at_center = dist <= EQUALITY_TOL
    report = compare("c1_bound", nv.value, wv, False,
                     f"reflexive: {is_reflexive(translate(hp.P, tuple(-c for c in center)))}; "
                     f"santalo point at weight point: {at_center}")
    holds = report.holds and (report.equality_within_tol or not at_center)
    return BoundReport(report.name, report.lhs, report.rhs, holds, False, at_center,
                       report.notes)


def run_suite(obj, suite="all", tol=DEFAULT_TOL):
    """Reports for a cone or a polytope; ``suite`` is all|bs|rdp|euler|c1|thm35|mahler."""
    from .toric import ToricCone

    reports = []
    if isinstance(obj, ToricCone):
        P = height_polytope(obj).P
        if suite in ("all", "bs"):
            reports.append(verify_blaschke_santalo(P, tol))
        if suite in ("all", "mahler"):
            reports.append(verify_mahler_conjecture(P, tol))
        if suite in ("all", "rdp"):
            reports.append(verify_rdp_bound(obj, tol))
        if suite in ("all", "thm35"):
            reports.extend(verify_volume_index_bounds(obj, tol))
        if suite in ("all", "euler"):
            reports.extend(euler_bound_report(obj, tol))
        if suite in ("all", "c1"):
            try:
                reports.append(verify_c1_bound(obj, tol=tol))
            except OriginNotInterior as exc:
                reports.append(compare("c1_bound", 0, 0, False,
                                       f"not applicable: {exc}", advisory=True))
    else:
        if suite in ("all", "bs"):
            reports.append(verify_blaschke_santalo(obj, tol))
        if suite in ("all", "mahler"):
            reports.append(verify_mahler_conjecture(obj, tol))
        if suite == "all" and len(obj.vertices) == obj.dim + 2:
            reports.extend(partition_volume_bounds(obj.vertices, tol))
    return reports
