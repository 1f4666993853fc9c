"""The weighted C*-action on P^4, the involution, orbit degrees and fixed points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import MPoly, normalize, scalar_str

COORDS = ("x", "y", "z", "t", "w")
ACTION = (0, 1, 3, 5, 6)


class NotSemiInvariant(ValueError):
    """Two monomials of different weight were found."""

    def __init__(self, mono1, w1, mono2, w2):
        self.witnesses = ((mono1, w1), (mono2, w2))
        super().__init__(f"monomials {mono1} (weight {w1}) and {mono2} (weight {w2}) differ")


def _mono_str(variables, e):
    s = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(variables, e) if k)
    return s or "1"


def weight_of(p: MPoly, action=ACTION) -> int:
    """Common action-weight of all monomials of p."""
    if not p:
        raise ValueError("the zero polynomial has no weight")
    if len(p.vars) != len(action):
        raise ValueError("variable count does not match the weight vector")
    first = None
    for e in sorted(p.terms, reverse=True):
        w = sum(k * r for k, r in zip(e, action))
        if first is None:
            first = (e, w)
        elif w != first[1]:
            raise NotSemiInvariant(_mono_str(p.vars, first[0]), first[1], _mono_str(p.vars, e), w)
    return first[1]


def is_semi_invariant(p: MPoly, action=ACTION) -> bool:
    try:
        weight_of(p, action)
        return True
    except NotSemiInvariant:
        return False


def apply_involution(p: MPoly) -> MPoly:
    """Swap x with w and y with t."""
    if p.vars != COORDS:
        raise ValueError(f"involution needs variables {COORDS}, got {p.vars}")
    return p.permute_exponents((4, 3, 2, 1, 0))


def involute_point(coords):
    return tuple(reversed(coords))


@dataclass(frozen=True)
class WeightedPoint:
    coords: tuple
    weights: tuple

    def __post_init__(self):
        coords = tuple(normalize(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(coords) != len(self.weights):
            raise ValueError("coordinate and weight vectors differ in length")
        if len(coords) < 2:
            raise ValueError("need at least two coordinates")
        if not any(coords):
            raise ValueError("all coordinates are zero")

    @property
    def support(self):
        return tuple(i for i, c in enumerate(self.coords) if c)

    def scaled(self) -> "WeightedPoint":
        """Representative with first nonzero coordinate equal to 1."""
        lead = self.coords[self.support[0]]
        return WeightedPoint(tuple(c / lead for c in self.coords), self.weights)

    def __str__(self):
        return "(" + " : ".join(scalar_str(c) for c in self.coords) + ")"


def projectively_equal(p, q) -> bool:
    p = tuple(normalize(c) for c in p)
    q = tuple(normalize(c) for c in q)
    if len(p) != len(q):
        return False
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if normalize(p[i] * q[j] - p[j] * q[i]):
                return False
    return any(p) and any(q)


@dataclass(frozen=True)
class OrbitInfo:
    degree: int
    support: tuple
    gcd: int
    normalized_exponents: tuple
    is_rational_normal: bool
    is_fixed_point: bool
    distinct_weights: int

    @property
    def literal_rn_criterion(self) -> bool:
        """The test 'degree equals the count of distinct support weights'."""
        return not self.is_fixed_point and self.degree == self.distinct_weights


def orbit_info(pt: WeightedPoint) -> OrbitInfo:
    """Degree and shape of the closure of the orbit of pt."""
    sigma = pt.support
    ws = sorted({pt.weights[i] for i in sigma})
    if len(ws) < 2:
        return OrbitInfo(0, sigma, 1, (0,), False, True, len(ws))
    base = ws[0]
    d = 0
    for w in ws:
        d = math.gcd(d, w - base)
    exps = tuple((w - base) // d for w in ws)
    degree = exps[-1]
    return OrbitInfo(
        degree=degree,
        support=sigma,
        gcd=d,
        normalized_exponents=exps,
        is_rational_normal=exps == tuple(range(degree + 1)),
        is_fixed_point=False,
        distinct_weights=len(ws),
    )


def orbit_limits(pt: WeightedPoint):
    """Limits of lambda . pt as lambda -> 0 and lambda -> infinity."""
    sigma = pt.support
    lo = min(pt.weights[i] for i in sigma)
    hi = max(pt.weights[i] for i in sigma)
    zero = Fraction(0)
    at0 = tuple(c if (c and w == lo) else zero for c, w in zip(pt.coords, pt.weights))
    atinf = tuple(c if (c and w == hi) else zero for c, w in zip(pt.coords, pt.weights))
    return WeightedPoint(at0, pt.weights), WeightedPoint(atinf, pt.weights)


def act(pt: WeightedPoint, lam) -> WeightedPoint:
    return WeightedPoint(tuple(c * lam ** w for c, w in zip(pt.coords, pt.weights)), pt.weights)


def fixed_points_on(hyp: MPoly, action=ACTION):
    """Coordinate points (the fixed points when weights are distinct) on hyp = 0."""
    if len(set(action)) != len(action):
        raise ValueError("weights must be pairwise distinct")
    out = []
    n = len(hyp.vars)
    for i in range(n):
        point = {v: Fraction(1 if j == i else 0) for j, v in enumerate(hyp.vars)}
        if not hyp.evaluate(point):
            out.append(tuple(Fraction(1 if j == i else 0) for j in range(n)))
    return out
