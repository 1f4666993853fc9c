from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import rationals
from v22check.exactalg import MPoly, parse
from v22check.paperdata import GAMMA_SLOTS, ZETA_SLOTS, ZETA_WEIGHTS, catalog
from v22check.torusgeom import (
    ACTION,
    COORDS,
    NotSemiInvariant,
    WeightedPoint,
    act,
    apply_involution,
    fixed_points_on,
    involute_point,
    is_semi_invariant,
    orbit_info,
    orbit_limits,
    projectively_equal,
    weight_of,
)


def test_weight_of_examples():
    assert weight_of(parse("x*w - y*t", COORDS)) == 6
    assert weight_of(parse("y^3 - x^2*z", COORDS)) == 3
    with pytest.raises(NotSemiInvariant):
        weight_of(parse("x + y", COORDS))


def test_weight_of_zero_rejected():
    with pytest.raises(ValueError):
        weight_of(MPoly.zero(COORDS))


def test_catalog_weights():
    p = catalog().polys
    for name in GAMMA_SLOTS:
        assert weight_of(p[name]) == int(name[1:])
    assert [weight_of(p[s]) for s in ZETA_SLOTS] == list(ZETA_WEIGHTS)


def test_involution_maps_weight_k_to_complement():
    p = catalog().polys
    for name in GAMMA_SLOTS:
        assert weight_of(apply_involution(p[name])) == 18 - weight_of(p[name])
    for s in ZETA_SLOTS:
        assert weight_of(apply_involution(p[s])) == 30 - weight_of(p[s])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                min_size=1, max_size=4), rationals)
def test_semi_invariance_under_involution(exps, c):
    # iota sends weight k to 6 deg - k, so only homogeneous inputs keep a single weight
    deg = sum(exps[0])
    terms = {e: c or 1 for e in exps if sum(e) == deg}
    p = MPoly(COORDS, terms)
    assert is_semi_invariant(p) == is_semi_invariant(apply_involution(p))
    assert apply_involution(apply_involution(p)) == p


def test_orbit_of_gamma_base_has_degree_six():
    info = orbit_info(WeightedPoint((1, 1, 1, 1, 1), ACTION))
    assert info.degree == 6
    assert info.normalized_exponents == (0, 1, 3, 5, 6)
    assert not info.is_rational_normal


def test_rational_normal_shapes():
    info = orbit_info(WeightedPoint((1, 1, 1), (2, 4, 6)))
    assert info.degree == 2 and info.gcd == 2 and info.is_rational_normal
    assert orbit_info(WeightedPoint((1, 0), (3, 5))).is_fixed_point


@settings(max_examples=200, deadline=None)
@given(st.lists(rationals, min_size=5, max_size=5).filter(any), st.integers(1, 5).map(Fraction))
def test_degree_is_orbit_invariant(coords, lam):
    pt = WeightedPoint(tuple(coords), ACTION)
    assert orbit_info(act(pt, lam)) == orbit_info(pt)


def test_orbit_limits():
    pt = WeightedPoint((0, 2, 1, 0, 3), ACTION)
    lo, hi = orbit_limits(pt)
    assert lo.coords == (0, 2, 0, 0, 0) and hi.coords == (0, 0, 0, 0, 3)


def test_projective_equality():
    assert projectively_equal((1, 2, 0), (3, 6, 0))
    assert not projectively_equal((1, 2, 0), (1, 2, 1))
    assert not projectively_equal((0, 0), (0, 0))


def test_fixed_points_on_quadric():
    pts = fixed_points_on(catalog().polys["quadric"])
    assert len(pts) == 4
    assert (0, 0, 1, 0, 0) not in [tuple(int(c) for c in p) for p in pts]
    assert {involute_point(p) for p in pts} == set(pts)


def test_weighted_point_validation():
    with pytest.raises(ValueError):
        WeightedPoint((0, 0), (1, 2))
    with pytest.raises(ValueError):
        WeightedPoint((1, 2), (1,))
