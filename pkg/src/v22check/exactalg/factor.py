"""Splitting off factors of degree at most 2 from polynomials in u."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import RatFunc, UPoly, normalize


@dataclass
class UFactorization:
    constant: Fraction
    factors: list = field(default_factory=list)  # (primitive integer UPoly, multiplicity)
    remainder: UPoly = field(default_factory=lambda: UPoly.const(1))

    def expand(self) -> UPoly:
        p = UPoly.const(self.constant) * self.remainder
        for f, k in self.factors:
            p = p * f ** k
        return p

    def roots_rational(self):
        return [-f.coeffs[0] / f.coeffs[1] for f, _ in self.factors if f.degree == 1]

    def without(self, *drop) -> list:
        drop = [primitive(d if isinstance(d, UPoly) else UPoly(d)) for d in drop]
        return [(f, k) for f, k in self.factors if f not in drop]

    def __str__(self):
        parts = [] if self.constant == 1 else [str(self.constant)]
        for f, k in self.factors:
            s = f"({f})"
            parts.append(s if k == 1 else f"{s}^{k}")
        if not self.remainder.is_one():
            parts.append(f"[{self.remainder}]")
        return "*".join(parts) if parts else "1"


def _integer_primitive(p: UPoly):
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def primitive(p: UPoly) -> UPoly:
    """Integer polynomial with content 1 and positive leading coefficient."""
    return UPoly(_integer_primitive(p))


def _divisors(n: int):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _squarefree_decomposition(p: UPoly):
    """Yun's algorithm: list of (square-free monic part, multiplicity)."""
    out = []
    p = p.monic()
    if p.degree < 1:
        return out
    dp = p.derivative()
    a = UPoly.gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = UPoly.gcd(b, d)
        b2 = b // a
        c = d // a
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b2
        d = c - b.derivative()
        i += 1
    return out


def _rational_roots(p: UPoly):
    ints = _integer_primitive(p)
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(ints) if c)
        ints = ints[k:]
    if len(ints) <= 1:
        return roots
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r not in roots and UPoly(ints).evaluate(r) == 0:
                    roots.append(r)
    return roots


def _quadratic_factor(p: UPoly):
    """Find a monic irreducible rational quadratic factor via Kronecker's method."""
    if p.degree < 4:
        return p if p.degree == 2 else None
    ints = _integer_primitive(p)
    ip = UPoly(ints)
    points = []
    x = 0
    while len(points) < 3:
        v = int(ip.evaluate(Fraction(x)))
        if v:
            points.append((x, v))
        x = -x if x > 0 else -x + 1
    choices = []
    for _, v in points:
        ds = _divisors(v)
        choices.append(ds + [-d for d in ds])
    (x0, _), (x1, _), (x2, _) = points
    for d0, d1, d2 in itertools.product(*choices):
        # interpolate q with q(xi) = di
        q = UPoly.const(0)
        for (xi, di), others in (((x0, d0), (x1, x2)), ((x1, d1), (x0, x2)), ((x2, d2), (x0, x1))):
            basis = UPoly.const(di)
            for xj in others:
                basis = basis * UPoly([Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
            q = q + basis
        if q.degree != 2:
            continue
        if not (p % q):
            return q.monic()
    return None


def factor_square_free_in_u(p) -> UFactorization:
    """Split p into a constant, factors of degree <= 2 irreducible over Q, and a remainder."""
    if isinstance(p, RatFunc):
        if not p.is_polynomial():
            raise ValueError("expected a polynomial in u")
        p = p.num
    elif not isinstance(p, UPoly):
        p = UPoly.const(normalize(p))
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    const = p.lc()
    result = UFactorization(constant=const)
    remainder = UPoly.const(1)
    for part, mult in _squarefree_decomposition(p):
        rest = part
        for r in _rational_roots(rest):
            lin = UPoly([-r, 1])
            result.factors.append((lin, mult))
            rest = rest // lin
        while rest.degree >= 2:
            q = _quadratic_factor(rest)
            if q is None:
                break
            result.factors.append((q, mult))
            rest = rest // q
        if rest.degree >= 1:
            remainder = remainder * rest.monic() ** mult
    result.factors = [(primitive(f), k) for f, k in result.factors]
    result.remainder = remainder
    lead = Fraction(1)
    for f, k in result.factors:
        lead *= f.lc() ** k
    result.constant = const / lead
    result.factors.sort(key=lambda fk: (fk[0].degree, [float(c) for c in fk[0].coeffs]))
    return result


def strip_admissibility(fac: UFactorization):
    """Factors other than u and u - 1 (the excluded parameter values)."""
    return fac.without(UPoly([0, 1]), UPoly([-1, 1]))
