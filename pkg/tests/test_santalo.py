from fractions import Fraction as F
from math import factorial

import pytest

from toricvol.errors import OriginNotInterior, ToleranceNotReached
from toricvol.polytope import (
    barycenter,
    convex_hull,
    cube,
    iterated_pyramid_over_square,
    standard_simplex,
)
from toricvol.santalo import (
    DualVolume,
    mahler_volume,
    polar_volume_at,
    polar_volume_gradient,
    santalo_point,
)
from conftest import random_lattice_polytope

seg = convex_hull([(0,), (2,)])


def test_polar_volume_examples():
    assert polar_volume_at(seg, (1,)) == 2
    assert polar_volume_at(seg, (F(1, 2),)) == F(8, 3)
    assert polar_volume_at(cube(2), (F(1, 2), F(1, 2))) == 8
    with pytest.raises(OriginNotInterior):
        polar_volume_at(seg, (0,))


def test_polar_volume_gradient_examples():
    assert polar_volume_gradient(cube(2), (F(1, 2), F(1, 2))) == (0, 0)
    assert polar_volume_gradient(standard_simplex(2), (F(1, 3), F(1, 3))) == (0, 0)
    assert polar_volume_gradient(seg, (F(1, 2),))[0] < 0


def test_closed_form_matches_generic_route(rng):
    for dim in (2, 3):
        P = random_lattice_polytope(rng, dim, 8)
        f = DualVolume(P)
        x = barycenter(P)
        val, grad, _ = f.derivatives(x)
        assert val == polar_volume_at(P, x)
        assert tuple(grad) == polar_volume_gradient(P, x)


@pytest.mark.parametrize("n", range(1, 6))
def test_simplex_fast_path(n):
    res = santalo_point(standard_simplex(n))
    assert res.exact
    assert res.point == tuple(F(1, n + 1) for _ in range(n))
    assert res.mahler == F((n + 1) ** (n + 1), factorial(n) ** 2)


def test_square_is_exact():
    res = santalo_point(cube(2))
    assert res.exact and res.point == (F(1, 2), F(1, 2)) and res.mahler == 8


def test_pyramid():
    res = santalo_point(iterated_pyramid_over_square(3))
    assert res.residual <= 1e-8
    assert res.mahler == F(32 * 4 ** 4, 27 * 36)


def test_newton_matches_fast_path():
    P = standard_simplex(3)
    slow = santalo_point(P, fast_path=False)
    assert abs(slow.dual_volume - santalo_point(P).dual_volume) < F(1, 10 ** 12)


def test_bad_start_and_tolerance():
    with pytest.raises(OriginNotInterior):
        santalo_point(cube(2), start=(0, 0))
    P = convex_hull([(0, 0), (5, 0), (0, 2), (1, 2)])
    with pytest.raises(ToleranceNotReached):
        santalo_point(P, tol=1e-9, max_iter=1)


def test_mahler_volume_is_at_most_barycentric_product(rng):
    for _ in range(5):
        P = random_lattice_polytope(rng, 2, 7)
        b = barycenter(P)
        assert mahler_volume(P) <= polar_volume_at(P, b) * (mahler_volume(P) / santalo_point(P).dual_volume)
