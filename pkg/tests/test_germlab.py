from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from v22check import germlab
from v22check.exactalg import U, MPoly, parse
from v22check.germlab import A1, A2, A3, D4, SMOOTH
from v22check.paperdata import catalog
from v22check.torusgeom import COORDS

XY = ("x", "y")
NORMAL_FORMS = {
    A1: "x^2 + y^2",
    A2: "y^2 + x^3",
    A3: "y^2 + x^4",
    D4: "x^3 + y^3",
}


def _change(poly, m, c):
    """Substitute (x, y) -> m.(x, y), then y -> y + c x^2."""
    x, y = MPoly.var("x", XY), MPoly.var("y", XY)
    lin = {"x": x * m[0][0] + y * m[0][1], "y": x * m[1][0] + y * m[1][1]}
    poly = poly.substitute(lin).with_vars(XY)
    return poly.substitute({"x": x, "y": y + x * x * c}).with_vars(XY)


unimodular = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).flatmap(
    lambda t: st.sampled_from([
        ((1, t[0]), (0, 1)),
        ((1, 0), (t[1], 1)),
        ((0, 1), (1, t[2])),
        ((1 + t[0] * t[1], t[0]), (t[1], 1)),
    ]))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(sorted(NORMAL_FORMS)), unimodular, st.integers(-3, 3), st.integers(1, 5))
def test_classifier_is_invariant_under_coordinate_changes(kind, m, c, scale):
    poly = parse(NORMAL_FORMS[kind], XY) * scale
    changed = _change(poly, m, Fraction(c))
    assert germlab.classify_plane_germ(changed, XY).kind == kind


def test_smooth_and_a1():
    assert germlab.classify_plane_germ(parse("x + y^2", XY)).kind == SMOOTH
    res = germlab.classify_plane_germ(parse("x*y + x^3", XY))
    assert res.kind == A1 and res.witness["discriminant"] == "1"


def test_tacnode_beta():
    res = germlab.classify_plane_germ(parse("y^2 - x^4", XY))
    assert res.kind == A3 and res.witness["beta"] == "-1"


def test_germ51_types():
    g = catalog().polys["germ51"]
    assert germlab.classify_plane_germ(g, ("t", "y")).kind == A1
    assert germlab.classify_plane_germ(g.specialize_u(2), ("t", "y")).kind == D4


def test_germ52_discriminant_matches_sympy():
    g = catalog().polys["germ52"]
    disc = germlab.quadratic_discriminant(g, ("x", "w"))
    u = sympy.Symbol("u")
    assert sympy.factor(sympy.sympify(str(disc).replace("^", "**"))) == sympy.factor(u ** 2 * (4 * u - 3))
    assert germlab.classify_plane_germ(g.specialize_u(Fraction(3, 4)), ("x", "w")).kind == A3


def test_chart_eq_solves_the_quadric():
    ch = germlab.chart_eq(catalog().polys["h15"], "x", "w", U ** 2)
    assert ch.local == catalog().polys["N15_chart"]
    assert ch.variables == ("y", "z", "t")


def test_chart_eq_requires_linear_elimination():
    with pytest.raises(germlab.NotLinear):
        germlab.solve_quadric("x", "z")


def test_expand_at_rejects_points_off_the_surface():
    eq = catalog().polys["N5_chart"]
    with pytest.raises(germlab.NotOnSurface):
        germlab.expand_at(eq, (1, 1, 2))
    g = germlab.expand_at(eq, (1, 1, 1))
    assert not g.jet(0) and g.variables == ("yb", "zb", "tb")


def _germ(name, mult, u=None):
    q = catalog().polys["quadric"]
    p = catalog().polys[name]
    if u is not None:
        q, p, mult = q.specialize_u(u), p.specialize_u(u), MPoly.const(mult).specialize_u(u).constant_coeff()
    return germlab.expand_at(germlab.chart_eq(p, "x", "w", mult, q).local, (1, 1, 1))


def test_tangency_loci():
    cond = germlab.linear_parts_proportional(_germ("h3", 1), _germ("h15", U ** 2))
    assert cond.kind == "locus" and [str(f) for f in cond.factors] == ["3*u - 2"]
    assert cond.holds_at(Fraction(2, 3)) and not cond.holds_at(2)
    cond = germlab.linear_parts_proportional(_germ("h5", 1), _germ("h13", U ** 2))
    assert [str(f) for f in cond.factors] == ["u - 2"]
    assert germlab.linear_parts_proportional(_germ("h8", U), _germ("h10", U)).kind == "never"
    assert germlab.linear_parts_proportional(_germ("f", 1), _germ("h3", 1)).kind == "never"


def test_quad_form_rank_one_and_two():
    v = ("yb", "zb", "tb")
    sq = catalog().polys["M15mu_square"].with_vars(v)
    qa = germlab.quad_form_analyze(sq, v)
    assert qa.rank == 1 and qa.square is not None
    c, lin = qa.square
    assert lin * lin * MPoly.const(c, v) == sq
    f10 = catalog().polys["M10_factors_at_minus_2"].with_vars(v)
    qa = germlab.quad_form_analyze(f10, v)
    c, l1, l2 = qa.factors
    assert l1 * l2 * MPoly.const(c, v) == f10


def test_rank_one_values_of_the_mu_family():
    q = catalog().polys["M15mu_quadratic"]
    vals = germlab.rank_one_values(q, ("yb", "zb", "tb"), "mu")
    assert vals == [catalog().scalars["mu_special"]]


def test_common_component_locus():
    v = ("yb", "zb", "tb")
    cond = germlab.common_component_condition(catalog().polys["M10_quadratic"].with_vars(v),
                                              catalog().polys["M20_quadratic"].with_vars(v), v)
    assert cond.kind == "locus" and [str(f) for f in cond.factors] == ["u + 2"]


def test_multiplicity_along_gamma():
    gamma = catalog().curves["Gamma"].coords
    q = catalog().polys["quadric"]
    for name in ("g10", "g15p", "g20", "g9"):
        cert = germlab.mult_along_curve(catalog().polys[name], gamma, quadric=q)
        assert cert.exact == 2
    assert germlab.gradient_dependent_on_curve(catalog().polys["g15p"], gamma, q)


def test_sym_matrix_of_the_quadric():
    m = germlab.sym_matrix(catalog().polys["quadric"], COORDS)
    assert len(m) == 5 and all(m[i][j] == m[j][i] for i in range(5) for j in range(5))
