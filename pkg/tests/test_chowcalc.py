from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from v22check import chowcalc
from v22check.chowcalc import (
    E,
    H,
    Q_GAMMA,
    V_C2,
    V_C4,
    V_C6,
    ChowContext,
    HbClass,
    SurfaceMismatch,
    anticanonical,
    as_number,
    cls,
    fiber,
    hb_intersect,
    hb_solve_kappa,
    section,
    sym,
    triple,
    upper_bound,
)

CONTEXTS = [Q_GAMMA, V_C2, V_C4, V_C6]
small = st.integers(-5, 5)
classes = st.builds(cls, small, small)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(CONTEXTS), classes, classes, classes, classes, small)
def test_triple_is_symmetric_and_multilinear(ctx, a, b, c, d, k):
    t = triple(ctx, a, b, c)
    assert t == triple(ctx, b, a, c) == triple(ctx, c, b, a)
    assert triple(ctx, a + d, b, c) == t + triple(ctx, d, b, c)
    assert triple(ctx, a * k, b, c) == t * k


@pytest.mark.parametrize("ctx", CONTEXTS)
def test_antican_cube_matches_blowup_formula(ctx):
    # (-K_Y)^3 = (-K_X)^3 - 2 (-K_X . C) + 2g - 2, with (-K_X)^3 = k^3 H^3
    expected = ctx.antican ** 3 * ctx.H3 - 2 * ctx.minus_k_dot_curve - 2
    assert chowcalc.anticanonical_cube(ctx) == expected


@pytest.mark.parametrize("ctx", CONTEXTS)
def test_e_cube_is_minus_normal_degree(ctx):
    # deg N = -K.C + 2g - 2
    assert chowcalc.e_cube(ctx) == -(ctx.minus_k_dot_curve - 2)


def test_displayed_values():
    assert [chowcalc.e_cube(c) for c in (Q_GAMMA, V_C4, V_C6, V_C2)] == [-16, -2, -4, 0]
    assert chowcalc.anticanonical_cube(V_C4) == 12 and chowcalc.anticanonical_cube(V_C6) == 8
    n, m = sym("n"), sym("m")
    k4 = anticanonical(V_C4)
    assert triple(V_C4, k4, k4, cls(n, -m)) == n * 18 - m * 6
    assert triple(V_C4, H - E, cls(n, -m), H - E * 2) == n * 14 - m * 8
    assert triple(V_C6, H - E, cls(1, -m), H - E * 2) == m * -10 + 10
    assert as_number(triple(V_C4, H - E, H - E, H - E * 3)) == 0
    assert as_number(triple(V_C6, H - E, H - E, H - E * 2)) == 0


def test_only_rational_centres():
    with pytest.raises(ValueError):
        ChowContext(22, 1, 4, genus=1)


@settings(max_examples=200, deadline=None)
@given(small, small, small, small, small)
def test_hirzebruch_form(n, a1, b1, a2, b2):
    c1, c2 = HbClass(n, a1, b1), HbClass(n, a2, b2)
    assert hb_intersect(c1, c2) == hb_intersect(c2, c1)
    assert as_number(hb_intersect(c1, c2)) == -n * a1 * a2 + a1 * b2 + a2 * b1


def test_hirzebruch_basics():
    n = sym("n")
    assert hb_intersect(section(n), section(n)) == -n
    assert as_number(hb_intersect(fiber(3), fiber(3))) == 0
    assert as_number(hb_intersect(section(3), fiber(3))) == 1
    with pytest.raises(SurfaceMismatch):
        hb_intersect(section(1), section(2))


def test_kappa_and_gamma_dot_s():
    n = sym("n")
    kappa = hb_solve_kappa(n, chowcalc.e_cube(Q_GAMMA))
    assert kappa == n * Fraction(1, 2) - 8
    anti = chowcalc.restricted_antican(Q_GAMMA, n)
    assert anti.b == n * Fraction(1, 2) + 10


def test_upper_bound():
    m = sym("m")
    assert upper_bound(m * -8 + 14) == Fraction(7, 4)
    with pytest.raises(ValueError):
        upper_bound(m * 2 + 1)


def test_all_items_pass():
    for res in chowcalc.verify_all():
        assert res.status == "PASS", res.witness
