"""Resultants of univariate polynomials and Sylvester matrices."""

from __future__ import annotations

from fractions import Fraction

from .linalg import det
from .mpoly import MPoly
from .scalars import normalize


def _trim(c):
    c = [normalize(x) for x in c]
    while c and not c[-1]:
        c.pop()
    return c


def _poly_mod(f, g):
    """Remainder of f by g, coefficient lists low-first over a field."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1] / lc
        shift = len(r) - 1 - dg
        for j, y in enumerate(g):
            r[shift + j] = r[shift + j] - c * y
        r = _trim(r)
    return r


def resultant_coeffs(f, g):
    """Res(f, g) for coefficient lists (low first) by the Euclidean recursion.

    Uses Res(f, g) = (-1)^(mn) Res(g, f) and
    Res(g, f) = lc(g)^(m - k) Res(g, f mod g), with k = deg(f mod g).
    """
    f, g = _trim(f), _trim(g)
    if not f or not g:
        return Fraction(0)
    result = Fraction(1)
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return normalize(result * g[0] ** m)
        if m == 0:
            return normalize(result * f[0] ** n)
        r = _poly_mod(f, g)
        if not r:
            return Fraction(0)
        k = len(r) - 1
        sign = -1 if (m * n) % 2 else 1
        result = result * sign * g[-1] ** (m - k)
        f, g = g, r


def resultant(f: MPoly, g: MPoly, var: str):
    """Res_var(f, g) for polynomials whose only variable is var."""
    return resultant_coeffs(f.univariate_coeffs(var), g.univariate_coeffs(var))


def sylvester_matrix(f, g, var: str):
    """Sylvester matrix of f, g in var; entries are MPolys in the remaining variables."""
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    m = f.degree(var)
    n = g.degree(var)
    zero = MPoly.zero(f.vars)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = fc.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = gc.get(k, zero)
        rows.append(row)
    return rows


def det_poly(mat):
    """Determinant of a small matrix of MPolys by cofactor expansion."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = None
    for j in range(n):
        if not mat[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * det_poly(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else mat[0][0] * 0


def resultant_multivariate(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Res_var(f, g) with coefficients in the other variables, via Sylvester."""
    f, g = f._align(g)
    return det_poly(sylvester_matrix(f, g, var))


def resultant_by_determinant(f: MPoly, g: MPoly, var: str):
    """Univariate resultant as det of the Sylvester matrix over the scalars."""
    mat = sylvester_matrix(f, g, var)
    return det([[e.constant_coeff() for e in row] for row in mat])


def poly_rem(f, g):
    """Remainder of coefficient lists (low first) over a field."""
    g = _trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    return _poly_mod(_trim(f), g)


def gcd_coeffs(f, g):
    """Monic gcd of two coefficient lists over a field; [] if both are zero."""
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, poly_rem(f, g)
    if not f:
        return []
    lc = f[-1]
    return [normalize(c / lc) for c in f]
