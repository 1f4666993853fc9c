"""Intersection numbers on blowups along rational curves, plus Hirzebruch
surface arithmetic and the affine inequalities that use them.

Coefficients are polynomials in the formal symbols n, m, eps, k, so an identity
such as (H-E)^2 (nH-mE) = 18n - 6m is checked for all values at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import MPoly
from .results import check, combine

SYMBOLS = ("n", "m", "eps", "k")


def sym(name: str) -> MPoly:
    return MPoly.var(name, SYMBOLS)


def const(c) -> MPoly:
    return MPoly.const(Fraction(c), SYMBOLS)


def _lift(c) -> MPoly:
    if isinstance(c, MPoly):
        return c.with_vars(SYMBOLS)
    return const(c)


def as_number(p: MPoly):
    """Constant polynomial -> Fraction; raises if a symbol survives."""
    p = _lift(p)
    if not p.is_constant():
        raise ValueError(f"not a constant: {p}")
    return p.constant_coeff()


@dataclass(frozen=True)
class ChowContext:
    """Blowup of a threefold X with -K_X = k H along a smooth rational curve C, H.C = dH."""

    H3: int
    antican: int
    dH: int
    genus: int = 0

    def __post_init__(self):
        if self.genus != 0:
            raise ValueError("only rational centres are supported")

    @property
    def rules(self):
        # indexed by the number of E factors
        return (self.H3, 0, -self.dH, 2 - self.antican * self.dH)

    @property
    def minus_k_dot_curve(self) -> int:
        return self.antican * self.dH


V_C2 = ChowContext(22, 1, 2)
V_C4 = ChowContext(22, 1, 4)
V_C6 = ChowContext(22, 1, 6)
Q_GAMMA = ChowContext(2, 3, 6)


@dataclass(frozen=True)
class ChowExpr:
    """h * sigma^*H + e * E."""

    h: object = 0
    e: object = 0

    def __post_init__(self):
        object.__setattr__(self, "h", _lift(self.h))
        object.__setattr__(self, "e", _lift(self.e))

    def __add__(self, other):
        return ChowExpr(self.h + other.h, self.e + other.e)

    def __sub__(self, other):
        return ChowExpr(self.h - other.h, self.e - other.e)

    def __neg__(self):
        return ChowExpr(-self.h, -self.e)

    def __mul__(self, c):
        c = _lift(c)
        return ChowExpr(self.h * c, self.e * c)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.h})*H + ({self.e})*E"


H = ChowExpr(1, 0)
E = ChowExpr(0, 1)


def cls(h, e) -> ChowExpr:
    return ChowExpr(h, e)


def anticanonical(ctx: ChowContext) -> ChowExpr:
    return ChowExpr(ctx.antican, -1)


def triple(ctx: ChowContext, e1: ChowExpr, e2: ChowExpr, e3: ChowExpr) -> MPoly:
    rules = ctx.rules
    total = const(0)
    for i, a in enumerate((e1.h, e1.e)):
        for j, b in enumerate((e2.h, e2.e)):
            for k, c in enumerate((e3.h, e3.e)):
                r = rules[i + j + k]
                if r:
                    total = total + a * b * c * r
    return total


def anticanonical_cube(ctx: ChowContext):
    k = anticanonical(ctx)
    return as_number(triple(ctx, k, k, k))


def e_cube(ctx: ChowContext):
    return as_number(triple(ctx, E, E, E))


@dataclass(frozen=True)
class HbClass:
    """a*s + b*l on the Hirzebruch surface F_n."""

    n: object
    a: object
    b: object

    def __post_init__(self):
        for f in ("n", "a", "b"):
            object.__setattr__(self, f, _lift(getattr(self, f)))

    def __add__(self, other):
        _same_surface(self, other)
        return HbClass(self.n, self.a + other.a, self.b + other.b)

    def __mul__(self, c):
        c = _lift(c)
        return HbClass(self.n, self.a * c, self.b * c)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.a})*s + ({self.b})*l on F_{self.n}"


class SurfaceMismatch(ValueError):
    pass


def _same_surface(c1: HbClass, c2: HbClass):
    if c1.n != c2.n:
        raise SurfaceMismatch(f"F_{c1.n} vs F_{c2.n}")


def hb_intersect(c1: HbClass, c2: HbClass) -> MPoly:
    _same_surface(c1, c2)
    return -c1.n * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b


def section(n) -> HbClass:
    return HbClass(n, 1, 0)


def fiber(n) -> HbClass:
    return HbClass(n, 0, 1)


def hb_solve_kappa(n, target) -> MPoly:
    """kappa with (s + kappa l)^2 = target, i.e. -n + 2 kappa = target."""
    return (_lift(target) + _lift(n)) * Fraction(1, 2)


def restricted_antican(ctx: ChowContext, n) -> HbClass:
    """-K of the blowup restricted to E = F_n, using -E|_E = s + kappa l."""
    kappa = hb_solve_kappa(n, e_cube(ctx))
    return HbClass(n, 1, kappa + ctx.minus_k_dot_curve)


def upper_bound(linear: MPoly, var: str = "m"):
    """For c0 + c1*var with c1 < 0, the threshold t with linear >= 0 iff var <= t."""
    linear = _lift(linear)
    if linear.degree(var) != 1 or linear.total_degree() != 1:
        raise ValueError(f"not linear in {var}: {linear}")
    c1 = linear.coeff({var: 1})
    c0 = linear.constant_coeff()
    if c1 >= 0:
        raise ValueError("slope must be negative")
    return Fraction(-c0) / c1


def _eq(cid, got, want, **kw):
    got, want = _lift(got), _lift(want)
    return check(cid, got == want, witness=f"{got}" if got == want else f"{got} != {want}", **kw)


def _bound(cid, poly, want, **kw):
    t = upper_bound(poly)
    return check(cid, t == want, witness=f"{poly} >= 0 iff m <= {t}", **kw)


def table():
    """Every intersection number quoted for the blowups; values are polynomials."""
    n, m = sym("n"), sym("m")
    HE = H - E
    out = [
        _eq("e-cube-Q-Gamma", e_cube(Q_GAMMA), -16),
        _eq("e-cube-V-C4", e_cube(V_C4), -2),
        _eq("e-cube-V-C6", e_cube(V_C6), -4),
        _eq("e-cube-V-C2", e_cube(V_C2), 0),
        _eq("minus-k-cube-C4", anticanonical_cube(V_C4), 12),
        _eq("minus-k-cube-C6", anticanonical_cube(V_C6), 8),
        _eq("minus-k-cube-C2", anticanonical_cube(V_C2), 16),
        _eq("K2-F-C4", triple(V_C4, HE, HE, cls(n, -m)), 18 * n - 6 * m),
        _eq("HE-F-T15p-C4", triple(V_C4, HE, cls(n, -m), cls(1, -2)), 14 * n - 8 * m),
        _eq("HE-D-T15pp-C6", triple(V_C6, HE, cls(1, -m), cls(1, -2)), 10 - 10 * m),
        _eq("HE-D-T15p-C4-mult3", triple(V_C4, HE, cls(1, -m), cls(1, -3)), 10 - 10 * m),
        _eq("K2-T15p-C4-mult3", triple(V_C4, HE, HE, cls(1, -3)), 0),
        _eq("K2-T15pp-C6", triple(V_C6, HE, HE, cls(1, -2)), 0),
    ]
    kappa_q = hb_solve_kappa(n, e_cube(Q_GAMMA))
    kappa_c4 = hb_solve_kappa(n, e_cube(V_C4))
    gamma_tilde = HbClass(n, 1, (n + 4) * Fraction(1, 2))
    antican_q = restricted_antican(Q_GAMMA, n)
    out += [
        _eq("kappa-Q-Gamma", kappa_q, (n - 16) * Fraction(1, 2)),
        _eq("kappa-V-C4", kappa_c4, (n - 2) * Fraction(1, 2)),
        _eq("antican-on-E-Q", antican_q.b, (n + 20) * Fraction(1, 2)),
        _eq("gamma-tilde-dot-s", hb_intersect(gamma_tilde, section(n)), (4 - n) * Fraction(1, 2)),
        _eq("curve-degree-intersection", hb_intersect(antican_q, gamma_tilde), 12),
        _eq("fiber-square", hb_intersect(fiber(n), fiber(n)), 0),
        _eq("antican-on-E-C4", restricted_antican(V_C4, n).b, (n + 6) * Fraction(1, 2)),
    ]
    two = two_section_class(n, sym("k"))
    out += [
        _eq("two-section-class", two.b, n + 2 - 2 * sym("k")),
        _eq("two-section-dot-s", hb_intersect(two, section(n)), 2 - n - 2 * sym("k")),
    ]
    return out


def two_section_class(n, varkappa) -> HbClass:
    """(H - 2E)|_E minus varkappa times two fibres, on E over the quartic curve."""
    kappa = hb_solve_kappa(n, e_cube(V_C4))
    restricted = HbClass(n, 0, V_C4.dH) + HbClass(n, 2, 2 * kappa)
    return restricted + HbClass(n, 0, -2 * _lift(varkappa))


def ledger():
    """Affine inequalities and bookkeeping identities used in the final estimates."""
    n, m, eps = sym("n"), sym("m"), sym("eps")
    HE = H - E
    out = []

    out.append(_bound("bound-m-7/4", triple(V_C4, HE, cls(1, -m), cls(1, -2)), Fraction(7, 4)))
    out.append(_bound("bound-m-1", triple(V_C6, HE, cls(1, -m), cls(1, -2)), Fraction(1)))

    # D~ - R/2 with R ~ 2H - 5E on the blowup along C2
    rest = cls(1, -m) - cls(2, -5) * Fraction(1, 2)
    ok = rest.h == const(0)
    out.append(check("bound-m-5/2", ok and upper_bound(rest.e) == Fraction(5, 2),
                     witness=f"D~ - R/2 = {rest}"))

    # Gamma~ . s >= 0 on E_Q
    g = hb_intersect(HbClass(n, 1, (n + 4) * Fraction(1, 2)), section(n))
    t = upper_bound(g, "n")
    out.append(check("bound-n-4", t == 4, witness=f"{g} >= 0 iff n <= {t}"))

    # the 2-section differs from s, varkappa >= 0
    c = hb_intersect(two_section_class(n, 0), section(n))
    t = upper_bound(c, "n")
    out.append(check("bound-n-2", t == 2, witness=f"{c} >= 0 iff n <= {t}"))
    # s + b l is ample on F_n iff b > n; here b - n = (6 - n)/2
    slack = restricted_antican(V_C4, n).b - n
    out.append(check("antican-ample-on-E-C4", upper_bound(slack, "n") == 6,
                     witness=f"b - n = {slack} > 0 for n <= 2"))

    e56 = Fraction(5, 6)
    em = e56 * Fraction(7, 4)
    out.append(check("eps-m-below-2", em == Fraction(35, 24) and em < 2,
                     witness=f"eps*m <= {em} < 2"))

    # D' ~ (2-m)(-K); the same step applied to D'/(2-m) gives back D, so
    # 1/(2-m) = 2 - mult(D')/(2-m), i.e. 2(2-m) - mult(D') = 1
    mult_dp = 3 - 2 * m
    identity = (2 - m) * 2 - mult_dp
    out.append(check("mult-D-prime", identity == const(1),
                     witness=f"(2-m)*2 - mult(D') = {identity}"))

    mult = eps * mult_dp + 2 * (eps * m - 1)
    at = mult.substitute({"eps": MPoly.const(e56, SYMBOLS)})
    out.append(check("mult-3eps-2", mult == 3 * eps - 2 and as_number(at) == Fraction(1, 2) and as_number(at) < 1,
                     witness=f"{mult} -> {as_number(at)}"))

    coeff = eps * (2 - m) + (eps * m - 1)
    val = as_number(coeff.substitute({"eps": MPoly.const(e56, SYMBOLS)}))
    thresholds = (Fraction(4, 5), Fraction(3, 4), Fraction(2, 3))
    out.append(check("class-2eps-1", coeff == 2 * eps - 1 and val == Fraction(2, 3) and all(val <= x for x in thresholds),
                     witness=f"{coeff} -> {val}"))

    # non-lc along C2 at 4/5
    trig = Fraction(5, 4)
    out.append(check("mult-trigger-5/4", Fraction(4, 5) * trig == 1,
                     witness="4/5*m > 1 iff m > 5/4"))

    out.extend(_hirzebruch_bounds())
    return out


def _hirzebruch_bounds():
    """kappa bounds for a section through a non-lc centre on E over the conic."""
    out = []
    # P1 x P1: -E|E ~ s, so (4/5) D~|E ~ (4m/5) s + (8/5) l and theta*kappa < 8/5
    k_max = _floor_below(Fraction(8, 5))
    antican = restricted_antican(V_C2, 0)
    deg = as_number(hb_intersect(antican, HbClass(0, 1, k_max)))
    out.append(check("hb-P1xP1-bound", antican.b == const(2) and deg == 2 + k_max and deg <= 3,
                     witness=f"kappa <= {k_max}, -K.C~ = {deg}"))
    # F2: -E|E ~ s + l, class (4m/5) s + (8+4m)/5 l with m <= 5/2
    limit = (8 + 4 * Fraction(5, 2)) / 5
    k_max = _floor_below(limit)
    antican = HbClass(2, 1, 1 + V_C2.minus_k_dot_curve)
    kappa = as_number(hb_solve_kappa(2, e_cube(V_C2)))
    deg = as_number(hb_intersect(antican, HbClass(2, 1, k_max)))
    out.append(check("hb-F2-bound", kappa == 1 and limit == Fraction(18, 5) and deg == 1 + k_max and deg <= 4,
                     witness=f"kappa < {limit} so kappa <= {k_max}, -K.C~ = {deg}"))
    return out


def _floor_below(x: Fraction) -> int:
    """Largest integer strictly below x."""
    f = x.numerator // x.denominator
    return f - 1 if f == x else f


def verify_all():
    return [combine("chow-table", table()), combine("chow-ledger", ledger())]
