from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from oracle import a, b, u
from v22check import curvelab
from v22check.exactalg import UPoly
from v22check.paperdata import FACTOR_SLOTS, catalog

from strategies import poly_to_sympy


@pytest.fixture(scope="module")
def conic_images_sympy():
    """zeta on the conic of iota-fixed points, computed by sympy."""
    conic = oracle.vector("conic")
    out = {}
    for name in FACTOR_SLOTS:
        slot = "g" + name[1:]
        out[name] = sympy.expand(oracle.expr(slot).subs(dict(zip(oracle.COORDS, conic)), simultaneous=True))
    return out


@pytest.mark.parametrize("name", FACTOR_SLOTS)
def test_factor_claims_against_sympy(name, conic_images_sympy):
    claim = oracle.expr(name)  # the factor_claims line
    assert sympy.expand(conic_images_sympy[name] - claim) == 0


@pytest.mark.parametrize("name", FACTOR_SLOTS)
def test_factor_table_matches_sympy_images(name, conic_images_sympy):
    ours = poly_to_sympy(curvelab.conic_images()[name])
    assert sympy.expand(ours - conic_images_sympy[name]) == 0


def test_printed_q0_is_not_the_factor():
    # the factor forced by p9 has a^2 b^2 coefficient 2(u-1)(2u-1)
    p9 = sympy.factor(oracle.expr("p9"))
    q0 = oracle.expr("q0")
    assert sympy.simplify(sympy.expand(p9) / q0).is_polynomial(a, b)
    assert sympy.expand(q0 - oracle.expr("q0_printed")) != 0
    assert sympy.expand(q0.coeff(a, 2).coeff(b, 2) - 2 * (u - 1) * (2 * u - 1)) == 0


def _sympy_locus(i, j):
    qi = oracle.expr(f"q{i}").subs(b, 1)
    qj = oracle.expr(f"q{j}").subs(b, 1)
    r = sympy.resultant(qi, qj, a)
    factors = {sympy.Poly(f, u).monic().as_expr() for f, _ in sympy.factor_list(r, u)[1]}
    return {f for f in factors if f not in (u, u - 1)}


def test_coprimality_loci_against_sympy():
    for i, j in combinations(range(7), 2):
        want = _sympy_locus(i, j)
        got = curvelab.coprimality_locus(i, j)
        ours = {sympy.Poly(sum(c * u ** k for k, c in enumerate(f.coeffs)), u).monic().as_expr() for f in got[0]}
        assert ours == want, (i, j)
    exceptional = {k for k, v in curvelab.EXPECTED_EXCEPTIONS.items()}
    assert {(i, j) for i, j in combinations(range(7), 2) if _sympy_locus(i, j)} == exceptional


def test_four_exceptional_loci():
    loci = {k: v[0] for k, v in curvelab.EXPECTED_EXCEPTIONS.items()}
    assert loci[(0, 6)] == UPoly([2, -2, 1])
    assert loci[(1, 6)] == UPoly([-2, 1])
    assert loci[(3, 5)] == UPoly([1, 1])
    assert loci[(2, 3)] == UPoly([-1, 1, 1])


def test_resultants_match_sylvester_on_all_q_pairs():
    from v22check.exactalg import resultant_by_determinant

    for i, j in combinations(range(7), 2):
        for uval in (Fraction(3), Fraction(-5, 2), Fraction(7, 3)):
            qi = curvelab._dehomogenize(curvelab._q(i, uval))
            qj = curvelab._dehomogenize(curvelab._q(j, uval))
            assert curvelab.q_resultant(i, j, uval) == resultant_by_determinant(qi, qj, "a")


def test_factor_table_verifies_generic_and_specialized():
    for uval in (None, Fraction(3, 4), Fraction(2), Fraction(-1)):
        assert all(r.status == "PASS" for r in curvelab.verify_factor_table(uval))


DEGREES = {"Delta": 4, "Upsilon": 6, "P_plus": 12, "P_minus": 12}


@pytest.mark.parametrize("name", sorted(DEGREES))
def test_image_degrees_against_oracle(name):
    uval = Fraction(9, 4)  # sqrt(u) = 3/2 is rational here
    rad = {oracle.sqrt_u: sympy.Rational(3, 2)}
    values = oracle.zeta_at(oracle.vector(name), sympy.Rational(9, 4), rad)
    assert oracle.orbit_degree(values) == DEGREES[name]
    assert curvelab.image_degree(catalog().points[name], u=uval).degree == DEGREES[name]
    assert curvelab.image_degree(catalog().points[name]).degree == DEGREES[name]


def test_psi_degrees_against_oracle():
    for uval, s in oracle.rational_theta_values()[:3]:
        for name in ("Psi", "Psi_prime"):
            values = oracle.zeta_at(oracle.vector(name), uval, {oracle.theta: s})
            assert oracle.orbit_degree(values) == 10
    from v22check.paperdata import psi_generator

    assert curvelab.image_degree(psi_generator("+")).degree == 10
    assert curvelab.image_degree(psi_generator("-")).degree == 10


def test_gamma_orbit_and_theta_10():
    assert curvelab.curve_degree((1, 1, 1, 1, 1)).degree == 6
    t10 = curvelab.conic_point(1, 0)
    assert curvelab.image_degree(t10, "gamma").degree == 12


def test_zero_patterns():
    pts = catalog().points
    assert curvelab.zero_slots("zeta", pts["Delta"]) == ("10", "11", "13", "14", "15'", "16", "17", "19", "20")
    assert curvelab.zero_slots("zeta", pts["Upsilon"]) == ("10", "12", "14", "16", "18", "20")
    assert curvelab.zero_slots("zeta", pts["P_plus"]) == ("15", "15'")


def _off_special(av, bv, uval):
    if not av or not bv or av == bv or (uval - 1) * av == uval * bv:
        return False
    for j in range(7):
        if not curvelab._q(j, uval).evaluate({"a": av, "b": bv}):
            return False
    return True


@settings(max_examples=150, deadline=None)
@given(st.integers(-12, 12), st.integers(1, 6), st.integers(-12, 12), st.integers(1, 6),
       st.sampled_from([Fraction(3), Fraction(-2, 5), Fraction(7, 4), Fraction(-3)]))
def test_random_theta_has_degree_10_or_12(an, ad, bn, bd, uval):
    av, bv = Fraction(an, ad), Fraction(bn, bd)
    if not _off_special(av, bv, uval):
        return
    deg = curvelab.image_degree(curvelab.conic_point(av, bv, uval), u=uval).degree
    assert deg in (10, 12)


def test_line_table():
    table = curvelab.membership_table()
    assert [s for s, inside in table["ell2"].items() if not inside] == ["g20", "g21"]
    assert [s for s, inside in table["ell1"].items() if not inside] == ["g9", "g10"]
    assert all(r.status == "PASS" for r in curvelab.verify_line_table())


def test_same_orbit():
    assert curvelab.same_orbit((1, 1, 1, 1, 1), (1, 2, 8, 32, 64))
    assert not curvelab.same_orbit((1, 1, 1, 1, 1), (1, 2, 8, 32, 65))


def test_all_zero_image_raises():
    with pytest.raises(curvelab.AllCoordinatesZero):
        curvelab.image_point("zeta", (1, 1, 1, 1, 1))


def test_s_image_is_a_conic():
    assert all(r.status == "PASS" for r in curvelab.s_image_conic())
