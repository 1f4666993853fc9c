"""Dense linear algebra over a field of scalars (Q, Q(u), quadratic extensions)."""

from __future__ import annotations

from fractions import Fraction

from .scalars import normalize


def _copy(m):
    return [[normalize(x) for x in row] for row in m]


def row_echelon(m):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c]
        a[r] = [normalize(x / inv) for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [normalize(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(row_echelon(m)[1])


def nullspace(m):
    """Basis of the right kernel."""
    if not m:
        return []
    cols = len(m[0])
    a, pivots = row_echelon(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = normalize(-a[r][f])
        basis.append(v)
    return basis


def det(m):
    """Determinant by Gaussian elimination over a field."""
    a = _copy(m)
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / piv
                a[i] = [normalize(x - f * y) for x, y in zip(a[i], a[c])]
    return normalize(result * sign)


def minors2(rows):
    """All 2x2 minors of a 2 x n matrix given as two rows."""
    r0, r1 = rows
    out = []
    n = len(r0)
    for i in range(n):
        for j in range(i + 1, n):
            out.append(((i, j), r0[i] * r1[j] - r0[j] * r1[i]))
    return out
