"""Santaló points and non-symmetric Mahler volumes of polytopes.

For a polytope ``P = {z : a_i . z <= b_i}`` and an interior point ``x`` the
dual ``(P - x)*`` has vertices ``a_i / s_i(x)`` with ``s_i = b_i - a_i . x``.
Its combinatorial type does not depend on ``x``, so coning a fixed boundary
triangulation from the origin gives the closed form

    vol((P - x)*) = sum_S |det A_S| / (n! * prod_{i in S} s_i(x)),

a rational function whose gradient and Hessian are available exactly.
Its gradient is ``(n + 1) vol(K*) barycenter(K*)`` for ``K = P - x``, so the
minimiser is the point where the dual's barycenter sits at the origin.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath
import numpy as np

from . import linalg
from .errors import OriginNotInterior, ToleranceNotReached
from .polytope import (
    barycenter,
    diameter,
    polar_dual,
    polar_dual_with_map,
    pulling_triangulation,
    symmetry_center,
    translate,
    vector,
    vertex_centroid,
    volume,
)

DEFAULT_TOL = 1e-9
MAX_DENOMINATOR = 2 ** 64


@dataclass(frozen=True)
class SantaloResult:
    point: tuple
    dual_volume: Fraction
    mahler: Fraction
    residual: mpmath.mpf
    iterations: int
    exact: bool
    dual_volume_lower: mpmath.mpf

    @property
    def mahler_bracket(self):
        vol_p = self.mahler / self.dual_volume
        return (self.dual_volume_lower * mpmath.mpf(vol_p.numerator) / vol_p.denominator,
                self.mahler)


def polar_volume_at(P, x):
    """Exact ``vol((P - x)*)``; raises :class:`OriginNotInterior` off the interior."""
    x = vector(x)
    return volume(polar_dual(translate(P, tuple(-a for a in x))))


def polar_volume_gradient(P, x):
    """Exact gradient of :func:`polar_volume_at` in ``x``."""
    x = vector(x)
    Q = polar_dual(translate(P, tuple(-a for a in x)))
    vol, bary = volume(Q), barycenter(Q)
    return tuple((P.dim + 1) * vol * c for c in bary)


class DualVolume:
    """The map ``x -> vol((P - x)*)`` compiled into its rational closed form."""

    def __init__(self, P):
        self.P = P
        self.n = n = P.dim
        c = vertex_centroid(P)
        Q, fmap = polar_dual_with_map(translate(P, tuple(-a for a in c)))
        to_facet = {d: i for i, d in enumerate(fmap)}
        memo = {}
        terms = []
        for face in Q.facet_vertices:
            for simp in pulling_triangulation(face, n - 1, Q.facet_vertices, memo):
                idx = tuple(sorted(to_facet[d] for d in simp))
                rows = [P.facets[i].normal for i in idx]
                terms.append((idx, abs(linalg.det(rows)) / factorial(n)))
        self.terms = terms
        self.A = np.array([[float(a) for a in h.normal] for h in P.facets])
        self.b = np.array([float(h.offset) for h in P.facets])
        self.S = np.array([t[0] for t in terms], dtype=int)
        self.coef = np.array([float(t[1]) for t in terms])

    # exact evaluations -----------------------------------------------------

    def slacks(self, x):
        return [h.slack(x) for h in self.P.facets]

    def value(self, x):
        s = self.slacks(x)
        if min(s) <= 0:
            raise OriginNotInterior("point is not strictly interior")
        total = Fraction(0)
        for idx, c in self.terms:
            d = 1
            for i in idx:
                d *= s[i]
            total += c / d
        return total

    def derivatives(self, x):
        """Exact ``(value, gradient, hessian)``."""
        n = self.n
        s = self.slacks(x)
        if min(s) <= 0:
            raise OriginNotInterior("point is not strictly interior")
        normals = [h.normal for h in self.P.facets]
        f = Fraction(0)
        g = [Fraction(0)] * n
        H = [[Fraction(0)] * n for _ in range(n)]
        for idx, c in self.terms:
            d = 1
            for i in idx:
                d *= s[i]
            w = c / d
            f += w
            G = [sum(normals[i][k] / s[i] for i in idx) for k in range(n)]
            for k in range(n):
                g[k] += w * G[k]
                for l in range(n):
                    H[k][l] += w * (G[k] * G[l] + sum(
                        normals[i][k] * normals[i][l] / (s[i] * s[i]) for i in idx))
        return f, g, H

    # float evaluations -----------------------------------------------------

    def fvalue(self, x):
        s = self.b - self.A @ x
        if np.any(s <= 0):
            return np.inf
        return float(np.sum(self.coef / np.prod(s[self.S], axis=1)))

    def fderivatives(self, x):
        s = self.b - self.A @ x
        inv = 1.0 / s
        w = self.coef * np.prod(inv[self.S], axis=1)
        AS = self.A[self.S] * inv[self.S][..., None]  # terms x n x dim
        G = AS.sum(axis=1)
        f = w.sum()
        g = w @ G
        H = np.einsum("t,tk,tl->kl", w, G, G) + np.einsum("t,tik,til->kl", w, AS, AS)
        return f, g, H


def _round(x):
    return tuple(Fraction(v).limit_denominator(MAX_DENOMINATOR) for v in x)


def _residual(f, g, n):
    bary = [gk / ((n + 1) * f) for gk in g]
    with mpmath.workdps(30):
        sq = sum((b * b for b in bary), Fraction(0))
        return mpmath.sqrt(mpmath.mpf(sq.numerator) / sq.denominator)


def _lower_bracket(P, x, dual_volume, residual):
    """Heuristic lower end ``value * (1 - n * diam(P*) * residual)``."""
    Q = polar_dual(translate(P, tuple(-a for a in x)))
    c = P.dim * diameter(Q)
    value = mpmath.mpf(dual_volume.numerator) / dual_volume.denominator
    return value * (1 - c * residual)


def _exact_result(P, x, iterations=0):
    dual = polar_volume_at(P, x)
    return SantaloResult(x, dual, volume(P) * dual, mpmath.mpf(0), iterations, True,
                         mpmath.mpf(dual.numerator) / dual.denominator)


def santalo_point(P, tol=DEFAULT_TOL, start=None, max_iter=10_000, fast_path=True):
    """Minimise ``vol((P - x)*)`` over the interior of ``P``.

    Symmetric polytopes and simplices are solved exactly.  Otherwise a
    damped Newton iteration runs in floating point from ``start`` (default:
    the barycenter of ``P``) and is then polished with exact rational Newton
    steps until the dual barycenter is within ``tol`` of the origin.
    """
    n = P.dim
    if fast_path and start is None:
        c = symmetry_center(P)
        if c is not None:
            return _exact_result(P, c)
        if P.is_simplex():
            return _exact_result(P, vertex_centroid(P))

    obj = DualVolume(P)
    x0 = vector(start) if start is not None else barycenter(P)
    if not P.contains(x0, strict=True):
        raise OriginNotInterior("start point is not strictly interior")
    x = np.array([float(v) for v in x0])
    it = 0
    while it < max_iter:
        it += 1
        f, g, H = obj.fderivatives(x)
        if np.linalg.norm(g) / ((n + 1) * f) < tol * 1e-3:
            break
        try:
            step = -np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            step = -g
        if not np.all(np.isfinite(step)) or g @ step >= 0:
            step = -g
        t, slope = 1.0, g @ step
        while t > 1e-30:
            trial = x + t * step
            ft = obj.fvalue(trial)
            if ft <= f + 1e-4 * t * slope:
                break
            t *= 0.5
        else:
            break
        if np.array_equal(trial, x):
            break
        x = trial

    xr = tuple(Fraction(v) for v in x)
    if not P.contains(xr, strict=True):
        xr = tuple(x0)
    f, g, H = obj.derivatives(xr)
    res = _residual(f, g, n)
    while res > tol and it < max_iter:
        it += 1
        step = linalg.solve(H, [-gk for gk in g])
        t = Fraction(1)
        while True:
            trial = _round(a + t * d for a, d in zip(xr, step))
            if P.contains(trial, strict=True) and obj.value(trial) <= f:
                break
            t /= 2
            if t < Fraction(1, 2 ** 60):
                raise ToleranceNotReached(f"line search stalled at residual {mpmath.nstr(res, 5)}")
        xr = trial
        f, g, H = obj.derivatives(xr)
        res = _residual(f, g, n)
    if res > tol:
        raise ToleranceNotReached(
            f"residual {mpmath.nstr(res, 5)} > {tol} after {it} iterations")
    if res == 0:
        # the rounded point is the exact critical point
        return SantaloResult(xr, f, volume(P) * f, res, it, True,
                             mpmath.mpf(f.numerator) / f.denominator)
    return SantaloResult(xr, f, volume(P) * f, res, it, False,
                         _lower_bracket(P, xr, f, res))


def mahler_volume(P, tol=DEFAULT_TOL):
    """``vol(P) * vol((P - chi)*)`` at the computed Santaló point, exact at that point."""
    return santalo_point(P, tol).mahler
