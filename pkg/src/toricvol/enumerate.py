"""Enumeration of toric singularities with normalized volume above a threshold.

Every Q-Gorenstein cone of index ``ell`` is ``cone(P x {ell})`` for a lattice
polytope ``P``.  A lower bound ``vol^ > eps`` caps both ``ell`` and the lattice
volume of ``P``:

    ell <= ((d-1)!)^2 omega_{d-1}^2 / eps
    lattice_volume(P) <= ((d-1)!)^2 omega_{d-1}^2 / (ell * eps)

so for ``d <= 3`` a finite search over segments or polygons, their integer
translates modulo ``ell`` and ``ell`` itself finds everything.
"""
import csv
import io
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import linalg
from .errors import BudgetExceeded, ToricVolError
from .polytope import (
    canonical_representative,
    convex_hull,
    lattice_volume,
    normal_form,
    unit_ball_volume,
)
from .santalo import DEFAULT_TOL
from .toric import cone_from_rays, cone_key, gorenstein_data, normalized_volume

DEFAULT_BUDGET = 10 ** 7
PROOF_CONSISTENT = "proof-consistent"


@dataclass(frozen=True)
class EnumerationJob:
    d: int
    epsilon: Fraction
    max_index: int
    max_volume: int
    box_side: int
    budget: int = DEFAULT_BUDGET
    constants: str = PROOF_CONSISTENT
    notes: str = ""
    scale: int = 1

    def volume_cap(self, ell):
        """Cap on the lattice volume of ``P`` for construction index ``ell``."""
        return _floor(self._constant() / (ell * self._eps())) * self.scale

    def _constant(self):
        f = math.factorial(self.d - 1)
        return f * f * unit_ball_volume(self.d - 1) ** 2

    def _eps(self):
        return mpmath.mpf(self.epsilon.numerator) / self.epsilon.denominator


def _floor(x):
    # a hair of slack keeps the cap a superset when x is an integer in theory
    return int(mpmath.floor(x * (1 + mpmath.mpf(10) ** -20)))


def make_job(d, epsilon, budget=DEFAULT_BUDGET, scale=1):
    """Derive caps from ``epsilon``; ``scale`` multiplies all caps (saturation checks)."""
    if d not in (2, 3):
        raise ValueError("enumeration supports d = 2 and d = 3 only")
    eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    job = EnumerationJob(d, eps, 0, 0, 0, budget)
    K = job._constant() / job._eps()
    max_index = _floor(K) * scale
    max_volume = _floor(K) * scale
    n = d - 1
    box = n * math.factorial(n) * max_volume
    notes = (f"constants={PROOF_CONSISTENT}; ell <= ((d-1)!)^2 omega_(d-1)^2 / eps = "
             f"{mpmath.nstr(K, 10)}; lattice_volume(P) <= that / ell; "
             f"box side n*n!*max_volume; scale={scale}")
    return EnumerationJob(d, eps, max_index, max_volume, box, budget, PROOF_CONSISTENT, notes,
                         scale)


@dataclass(frozen=True)
class SpectrumEntry:
    normal_form_key: bytes
    ell: int
    volume_value: Fraction
    value_bracket: tuple
    representative_rays: tuple
    exact: bool = False
    passes_rdp: bool = None
    passes_bs: bool = None


# polygons -----------------------------------------------------------------

def _expanded_region(P, slack):
    """Vertices of ``{a_e . x <= b_e + slack}`` for a polygon ``P``."""
    hs = P.facets
    pts = []
    for h1, h2 in itertools.combinations(hs, 2):
        x = linalg.solve([list(h1.normal), list(h2.normal)],
                         [h1.offset + slack, h2.offset + slack])
        if x is not None and all(h.value(x) <= h.offset + slack for h in hs):
            pts.append(x)
    return pts


def enumerate_polygons(max_lattice_volume, box_side=None, budget=DEFAULT_BUDGET):
    """All lattice polygons with normalized area at most the bound, up to
    affine unimodular equivalence, sorted by normal form.

    Polygons are grown one vertex at a time from triangles in Hermite form.
    Any polygon with ``k > 3`` vertices loses a vertex and stays
    two-dimensional, so growth from every class reaches every class.  New
    vertices are searched in the region where each edge is exceeded by at
    most the remaining volume budget, clipped to ``|x_i| <= box_side`` in the
    coordinates of the canonical representative.
    """
    V = int(max_lattice_volume)
    if V < 1:
        raise ValueError("max_lattice_volume must be at least 1")
    box = box_side if box_side is not None else 2 * math.factorial(2) * V
    found = {}
    queue = []

    def add(Q):
        key = normal_form(Q)
        if key not in found:
            rep = canonical_representative(Q)
            found[key] = rep
            queue.append(rep)

    for a in range(1, V + 1):
        for c in range(1, V // a + 1):
            for b in range(max(a, c)):
                add(convex_hull([(0, 0), (a, 0), (b, c)]))

    candidates = 0
    while queue:
        R = queue.pop()
        slack = V - lattice_volume(R)
        if slack <= 0:
            continue
        region = _expanded_region(R, slack)
        lo = [max(-box, math.floor(min(p[i] for p in region))) for i in range(2)]
        hi = [min(box, math.ceil(max(p[i] for p in region))) for i in range(2)]
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                p = (x, y)
                if R.contains(p) or any(h.value(p) > h.offset + slack for h in R.facets):
                    continue
                candidates += 1
                if candidates > budget:
                    raise BudgetExceeded(f"more than {budget} polygon candidates")
                Q = convex_hull(list(R.vertices) + [p])
                if lattice_volume(Q) <= V:
                    add(Q)
    return [found[k] for k in sorted(found)]


# singularities --------------------------------------------------------------

def _base_polytopes(job):
    if job.d == 2:
        return [convex_hull([(0,), (L,)]) for L in range(1, job.max_volume + 1)]
    return enumerate_polygons(job.max_volume, job.box_side, job.budget)


def _candidate_cones(job):
    """Distinct cones ``cone(P + t, ell)`` whose true index is ``ell``, keyed by normal form."""
    if job.constants != PROOF_CONSISTENT:
        raise ValueError("pruning must use the proof-consistent constants")
    bases = [(P, lattice_volume(P)) for P in _base_polytopes(job)]
    n = job.d - 1
    seen = {}
    count = 0
    for ell in range(1, job.max_index + 1):
        cap = job.volume_cap(ell)
        for P, lv in bases:
            if lv > cap:
                continue
            for t in itertools.product(range(ell), repeat=n):
                count += 1
                if count > job.budget:
                    raise BudgetExceeded(f"more than {job.budget} cone candidates")
                rays = [tuple(int(a + b) for a, b in zip(v, t)) + (ell,) for v in P.vertices]
                try:
                    cone = cone_from_rays(rays)
                    if gorenstein_data(cone).index != ell:
                        continue
                except ToricVolError:
                    continue
                key = cone_key(cone)
                if (key, ell) not in seen:
                    seen[(key, ell)] = cone
    return [(k, ell, seen[(k, ell)]) for k, ell in sorted(seen)]


def _evaluate(args):
    key, ell, rays, tol, check = args
    from .bounds import verify_blaschke_santalo, verify_rdp_bound

    cone = cone_from_rays(rays)
    nv = normalized_volume(cone, tol)
    rdp = bs = None
    if check:
        rdp = verify_rdp_bound(cone, tol).holds
        bs = verify_blaschke_santalo(nv.height.P, tol).holds
    return SpectrumEntry(key, ell, nv.value, nv.value_bracket, tuple(cone.rays),
                         nv.exact, rdp, bs)


def enumerate_singularities(job, jobs=1, tol=DEFAULT_TOL, check=True):
    """All cones with ``vol^ > epsilon`` for ``job``, sorted by descending volume.

    Candidate evaluation is split into a deterministic list; with ``jobs > 1``
    it runs in worker processes and the merge is a sort, so the output does
    not depend on scheduling.
    """
    cands = _candidate_cones(job)
    work = [(k, ell, cone.rays, tol, check) for k, ell, cone in cands]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_evaluate, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_evaluate(w) for w in work]
    out = [e for e in results if e.volume_value > job.epsilon]
    out.sort(key=lambda e: (-e.volume_value, e.normal_form_key, e.ell))
    return out


# spectrum -------------------------------------------------------------------

@dataclass
class Spectrum:
    values: list = field(default_factory=list)
    multiplicities: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    entries: list = field(default_factory=list)


def volume_spectrum(source, rel_tol=1e-7, jobs=1):
    """Distinct volumes (descending) with multiplicities and successive gaps.

    ``source`` is an :class:`EnumerationJob` or a list of entries.  Values
    computed by Newton iteration are grouped when they agree to ``rel_tol``.
    """
    entries = (enumerate_singularities(source, jobs) if isinstance(source, EnumerationJob)
               else source)
    spec = Spectrum(entries=list(entries))
    for e in spec.entries:
        v = e.volume_value
        if spec.values and abs(spec.values[-1] - v) <= rel_tol * abs(v):
            spec.multiplicities[-1] += 1
            continue
        spec.gaps.append(spec.values[-1] - v if spec.values else None)
        spec.values.append(v)
        spec.multiplicities.append(1)
    return spec


def spectrum_rows(entries):
    from .io import format_real, format_rational

    for e in entries:
        yield {
            "normal_form_key": e.normal_form_key.decode("ascii"),
            "ell": e.ell,
            "rays": " ".join(",".join(str(x) for x in r) for r in e.representative_rays),
            "volume_lower": format_real(e.value_bracket[0]),
            "volume_upper": format_rational(e.value_bracket[1]),
            "passes_rdp": e.passes_rdp,
            "passes_bs": e.passes_bs,
        }


SPECTRUM_COLUMNS = ["normal_form_key", "ell", "rays", "volume_lower", "volume_upper",
                    "passes_rdp", "passes_bs"]


def spectrum_csv(entries):
    buf = io.StringIO()
    w = csv.DictWriter(buf, SPECTRUM_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in spectrum_rows(entries):
        w.writerow(row)
    return buf.getvalue()
