from dataclasses import replace
from fractions import Fraction as F
from math import gcd

import pytest

from toricvol.bounds import minimal_p
from toricvol.enumerate import (
    enumerate_polygons,
    enumerate_singularities,
    make_job,
    spectrum_csv,
    volume_spectrum,
)
from toricvol.errors import BudgetExceeded
from toricvol.polytope import lattice_points, lattice_volume
from toricvol.toric import cone_from_rays, cone_key
from oracles import polygon_classes


@pytest.mark.parametrize("bound,side", [(1, 3), (2, 4), (3, 4), (4, 4)])
def test_polygon_counts_match_brute_force(bound, side):
    assert len(enumerate_polygons(bound)) == len(polygon_classes(bound, side))


def test_small_polygon_counts():
    assert len(enumerate_polygons(1)) == 1
    assert len(enumerate_polygons(2)) == 3


def test_reflexive_polygons():
    polys = enumerate_polygons(9)
    reflexive = [P for P in polys if len(lattice_points(P, strict=True)) == 1]
    assert len(reflexive) == 16
    assert all(lattice_volume(P) >= 1 for P in polys)


def test_lemma_46_on_quadrilaterals():
    for P in enumerate_polygons(6):
        if len(P.vertices) == 4:
            assert lattice_volume(P) >= minimal_p(P.vertices) + 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_polygons(6, budget=10)


def _two_ray_classes(max_k):
    keys = {}
    for k in range(1, max_k + 1):
        for a in range(k):
            if gcd(a, k) == 1:
                c = cone_from_rays([(1, 0), (a, k)])
                keys[cone_key(c)] = F(4, k)
    return keys


def test_surface_completeness():
    entries = enumerate_singularities(make_job(2, F(1, 2)))
    got = {e.normal_form_key: e.volume_value for e in entries}
    assert got == _two_ray_classes(7)
    assert len(got) == len(entries)


def test_parallel_is_deterministic():
    job = make_job(2, 1)
    a = enumerate_singularities(job, jobs=1, check=False)
    b = enumerate_singularities(job, jobs=2, check=False)
    assert a == b


def test_threefold_saturation():
    for eps in (8, 10):
        base = enumerate_singularities(make_job(3, eps), check=False)
        big = enumerate_singularities(make_job(3, eps, scale=2), check=False)
        assert [e.normal_form_key for e in base] == [e.normal_form_key for e in big]


def test_entries_unique_and_sorted():
    entries = enumerate_singularities(make_job(3, 8))
    pairs = [(e.normal_form_key, e.ell) for e in entries]
    assert len(set(pairs)) == len(pairs)
    vals = [e.volume_value for e in entries]
    assert vals == sorted(vals, reverse=True)
    assert all(e.passes_rdp and e.passes_bs for e in entries)


def test_job_audit():
    job = make_job(3, 8)
    assert job.constants == "proof-consistent"
    assert (job.max_index, job.max_volume) == (4, 4)
    assert [job.volume_cap(ell) for ell in (1, 2, 3, 4)] == [4, 2, 1, 1]
    with pytest.raises(ValueError):
        enumerate_singularities(replace(job, constants="printed"))


def test_spectrum():
    spec = volume_spectrum(make_job(2, F(1, 2)))
    assert spec.values == [4, 2, F(4, 3), 1, F(4, 5), F(2, 3), F(4, 7)]
    assert spec.multiplicities == [1, 1, 2, 2, 3, 2, 4]
    assert spec.gaps[0] is None and spec.gaps[1] == 2
    text = spectrum_csv(spec.entries)
    assert text.splitlines()[0] == ("normal_form_key,ell,rays,volume_lower,volume_upper,"
                                    "passes_rdp,passes_bs")
