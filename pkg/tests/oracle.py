"""Independent sympy reading of the shipped catalog.

Expressions are taken from the catalog source text and handed to sympy, so
nothing here goes through the package's parser or polynomial arithmetic.
"""

import math
import random
from functools import lru_cache

import sympy

from v22check.paperdata import ZETA_SLOTS, ZETA_WEIGHTS, catalog

u, a, b, theta, sqrt_u = sympy.symbols("u a b theta sqrt_u")
x, y, z, t, w = COORDS = sympy.symbols("x y z t w")
lam = sympy.Symbol("lam")
BASE = {str(s): s for s in (u, a, b, x, y, z, t, w, lam)}


def _text(name):
    return catalog().text_of(name).replace("^", "**")


@lru_cache(maxsize=None)
def expr(name):
    """A single catalog expression, with references to other names resolved."""
    text = _text(name)
    names = dict(BASE)
    for tok in sympy.sympify(text, locals={**names, "theta": theta, "sqrt_u": sqrt_u}).free_symbols:
        s = str(tok)
        if s not in BASE and s not in ("theta", "sqrt_u"):
            names[s] = expr(s)
    names.update(theta=theta, sqrt_u=sqrt_u)
    return sympy.expand(sympy.sympify(text, locals=names))


@lru_cache(maxsize=None)
def vector(name):
    names = dict(BASE, theta=theta, sqrt_u=sqrt_u)
    return tuple(sympy.sympify(c.strip().replace("^", "**"), locals=names) for c in catalog().text_of(name).split(";"))


def zeta_at(point, uval, radicals=None):
    """The 14 quintic values at a point of P^4 for u = uval."""
    subs = {u: uval, **(radicals or {})}
    pt = {v: sympy.nsimplify(sympy.sympify(c).subs(subs)) for v, c in zip(COORDS, point)}
    return [sympy.simplify(expr(s).subs(u, uval).subs(pt)) for s in ZETA_SLOTS]


def orbit_degree(values, weights=ZETA_WEIGHTS, seed=3):
    """Degree of the closure of {lambda . p} counted as points on a random hyperplane.

    The section polynomial in lambda has (max - min) nonzero roots; each point of
    the curve is hit by as many lambdas as the stabilizer has elements.
    """
    rng = random.Random(seed)
    support = [i for i, v in enumerate(values) if v != 0]
    section = sum(rng.randint(1, 97) * values[i] * lam ** weights[i] for i in support)
    low = min(weights[i] for i in support)
    poly = sympy.Poly(sympy.expand(section / lam ** low), lam)
    roots = sympy.degree(sympy.gcd(poly, poly.diff(lam)), lam)
    n_roots = poly.degree() - roots
    stab = 0
    for i in support:
        stab = math.gcd(stab, weights[i] - low)
    return n_roots // stab if stab else 0


def rational_theta_values(limit=12):
    """Rational u (off 0, 1) with (3u+1)(1-u) a nonzero rational square."""
    out = []
    # the conic s^2 = (3u+1)(1-u) through (u, s) = (1, 0); lines of slope k
    for k in range(-limit, limit + 1):
        k = sympy.Rational(k, 2)
        uu = (k ** 2 - 1) / (k ** 2 + 3)
        s = k * (uu - 1)
        if uu not in (0, 1) and s != 0 and (3 * uu + 1) * (1 - uu) == s ** 2:
            out.append((uu, s))
    return out
