"""Hypothesis strategies and a sympy bridge shared by the test modules."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from v22check.exactalg import MPoly, QuadExt, Radical, RatFunc, UPoly

VARS = ("x", "y", "z")

small_int = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=4))
nonzero_rationals = rationals.filter(bool)

upolys = st.lists(rationals, min_size=0, max_size=4).map(UPoly)
nonzero_upolys = upolys.filter(bool)
ratfuncs = st.builds(RatFunc, upolys, nonzero_upolys)

# coefficients: plain rationals or polynomials in u (no poles, so specialization is always defined)
coefficients = st.one_of(rationals, upolys.map(RatFunc))


@st.composite
def mpolys(draw, variables=VARS, max_terms=4, max_exp=2, coeffs=coefficients):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(min_value=0, max_value=max_exp)) for _ in variables)
        terms[e] = draw(coeffs)
    return MPoly(variables, terms)


THETA = Radical("theta", RatFunc(UPoly([1, 2, -3])))  # (3u+1)(1-u)
quadexts = st.builds(lambda a, b: QuadExt(a, b, THETA), coefficients, coefficients)

U = sympy.Symbol("u")


def to_sympy(c):
    """Exact sympy image of a scalar (rational, UPoly or RatFunc)."""
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    if isinstance(c, int):
        return sympy.Integer(c)
    if isinstance(c, UPoly):
        return sum((to_sympy(k) * U ** i for i, k in enumerate(c.coeffs)), sympy.Integer(0))
    if isinstance(c, RatFunc):
        return to_sympy(c.num) / to_sympy(c.den)
    raise TypeError(type(c))


def poly_to_sympy(p: MPoly):
    syms = sympy.symbols(p.vars) if p.vars else ()
    if len(p.vars) == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        mono = sympy.Integer(1)
        for s, k in zip(syms, e):
            mono *= s ** k
        out += to_sympy(c) * mono
    return out


def same(a, b) -> bool:
    return sympy.simplify(sympy.expand(a) - sympy.expand(b)) == 0
