"""Local equations on the quadric and classification of small singularities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import (
    MPoly,
    QuadExt,
    Radical,
    RatFunc,
    UPoly,
    factor_square_free_in_u,
    gcd_coeffs,
    linear_coefficients,
    minors2,
    normalize,
    rank,
    scalar_sqrt,
    scalar_str,
    strip_admissibility,
)
from .paperdata import catalog
from .torusgeom import COORDS

SMOOTH, A1, A2, A3, D4, UNCLASSIFIED = "Smooth", "A1", "A2", "A3", "D4", "Unclassified"


class NotOnSurface(ValueError):
    pass


class NotLinear(ValueError):
    pass


class ZeroLinearJet(ValueError):
    pass


class CurveNotOnSurface(ValueError):
    pass


@dataclass(frozen=True)
class ChartEq:
    chart: str
    eliminated: str
    solved: MPoly
    multiplier: object
    local: MPoly

    @property
    def variables(self):
        return self.local.vars


def solve_quadric(chart: str, elim: str, quadric: MPoly = None) -> MPoly:
    """Solve the quadric (with chart = 1) for the eliminated coordinate."""
    q = quadric if quadric is not None else catalog().polys["quadric"]
    q = q.substitute({chart: MPoly.const(1)})
    if q.degree(elim) != 1:
        raise NotLinear(f"the quadric is not linear in {elim}")
    parts = q.coeffs_in(elim)
    lead = parts[1]
    if not lead.is_constant():
        raise NotLinear(f"coefficient of {elim} is not a scalar")
    rest = parts.get(0, MPoly.zero(q.vars))
    rest_vars = tuple(v for v in COORDS if v not in (chart, elim))
    return (-rest / lead.constant_coeff()).with_vars(rest_vars)


def chart_eq(surface: MPoly, chart: str, elim: str, multiplier=1, quadric: MPoly = None) -> ChartEq:
    """Local equation of surface on the quadric in the affine chart chart = 1."""
    solved = solve_quadric(chart, elim, quadric)
    local = surface.substitute({chart: MPoly.const(1), elim: solved}) * MPoly.const(multiplier)
    rest_vars = tuple(v for v in COORDS if v not in (chart, elim))
    return ChartEq(chart, elim, solved, normalize(multiplier), local.with_vars(rest_vars))


def bar(v: str) -> str:
    return v + "b"


@dataclass(frozen=True)
class Germ:
    center: tuple
    variables: tuple  # shifted variable names
    poly: MPoly

    def jet(self, k: int) -> MPoly:
        return self.poly.homogeneous_part(k)

    def jets(self):
        return [self.jet(k) for k in range(self.poly.total_degree() + 1)]

    def linear(self):
        return linear_coefficients(self.jet(1), self.variables)


def expand_at(eq: MPoly, point) -> Germ:
    """Shift eq to the point; variables become v + 'b'."""
    if not isinstance(point, dict):
        point = dict(zip(eq.vars, point))
    if eq.evaluate(point):
        raise NotOnSurface(f"value {scalar_str(eq.evaluate(point))} at the point")
    names = tuple(bar(v) for v in eq.vars)
    shifted = eq.substitute({v: MPoly.var(bar(v), names) + MPoly.const(point[v], names) for v in eq.vars})
    shifted = shifted.with_vars(names)
    return Germ(tuple(point[v] for v in eq.vars), names, shifted)


def plane_germ(poly: MPoly) -> Germ:
    """A germ at the origin given directly by its equation."""
    return Germ(tuple(Fraction(0) for _ in poly.vars), poly.vars, poly)


# tangency


@dataclass(frozen=True)
class Condition:
    """Locus in u where a condition holds: always, never, or the roots of factors."""

    kind: str  # "always" | "never" | "locus"
    factors: tuple = ()
    witness: str = ""

    def holds_at(self, u) -> bool:
        if self.kind == "always":
            return True
        if self.kind == "never":
            return False
        return any(not f.evaluate(Fraction(u)) for f in self.factors)

    def __str__(self):
        if self.kind != "locus":
            return self.kind
        return " or ".join(f"{f} = 0" for f in self.factors)


def _num_upoly(c) -> UPoly:
    c = normalize(c)
    if isinstance(c, RatFunc):
        return c.num
    if isinstance(c, Fraction):
        return UPoly.const(c)
    raise TypeError("minors must lie in Q(u)")


def vanishing_condition(values) -> Condition:
    """Where all the given elements of Q(u) vanish (u and u - 1 excluded)."""
    values = [normalize(v) for v in values]
    wit = ", ".join(scalar_str(v) for v in values)
    nonzero = [v for v in values if v]
    if not nonzero:
        return Condition("always", (), wit)
    g = []
    for v in nonzero:
        g = gcd_coeffs(g, list(_num_upoly(v).coeffs)) if g else list(_num_upoly(v).coeffs)
    g = UPoly(g)
    if g.degree < 1:
        return Condition("never", (), wit)
    fac = factor_square_free_in_u(g)
    kept = tuple(f for f, _ in strip_admissibility(fac))
    if not fac.remainder.is_one():
        kept = kept + (fac.remainder,)
    if not kept:
        return Condition("never", (), wit)
    return Condition("locus", kept, wit)


def linear_parts_proportional(g1: Germ, g2: Germ) -> Condition:
    if g1.variables != g2.variables:
        raise ValueError("germs use different variables")
    l1, l2 = g1.linear(), g2.linear()
    if not any(l1) or not any(l2):
        raise ZeroLinearJet("a linear jet vanishes")
    return vanishing_condition([m for _, m in minors2((l1, l2))])


def proportionality_factor(form: MPoly, reference: MPoly):
    """c with form = c * reference, or None."""
    a, b = form._align(reference)
    if not b:
        return None
    e, c0 = b.leading_term()
    c = normalize(a.terms.get(e, Fraction(0)) / c0)
    if not c or a != b * MPoly.const(c):
        return None
    return c


# along a curve


def _on(g: MPoly, coords) -> MPoly:
    return g.substitute(dict(zip(COORDS, coords)))


def gradient_dependent_on_curve(g: MPoly, coords, quadric: MPoly = None) -> bool:
    """Jacobian of (quadric, g) has rank < 2 at every point of the parameterized curve."""
    q = quadric if quadric is not None else catalog().polys["quadric"]
    if _on(q, coords) or _on(g, coords):
        raise CurveNotOnSurface("curve is not on both hypersurfaces")
    gq = [_on(q.partial(v), coords) for v in COORDS]
    gg = [_on(g.partial(v), coords) for v in COORDS]
    return not any(m for _, m in minors2((gq, gg)))


@dataclass(frozen=True)
class MultCertificate:
    lower: int
    upper: int
    witness: str = ""

    @property
    def exact(self):
        return self.lower if self.lower == self.upper else None


def mult_along_curve(g: MPoly, coords, chart_point=(1, 1, 1), chart=("x", "w"), quadric: MPoly = None) -> MultCertificate:
    """Bounds for the multiplicity of {g = 0} on the quadric along a curve.

    The lower bound uses vanishing of g and of the Jacobian minors along the
    curve; the upper bound is the order of the local equation at one point
    of the curve, which bounds the multiplicity at a general point.
    """
    lower = 0
    if not _on(g, coords):
        lower = 1
        if gradient_dependent_on_curve(g, coords, quadric):
            lower = 2
    ce = chart_eq(g, chart[0], chart[1], quadric=quadric)
    germ = expand_at(ce.local, chart_point)
    upper = germ.poly.order()
    return MultCertificate(lower, upper, f"order {upper} at {tuple(scalar_str(c) for c in germ.center)}")


# quadratic forms


def sym_matrix(q: MPoly, variables):
    n = len(variables)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(variables):
        for j, w in enumerate(variables):
            if i == j:
                m[i][i] = normalize(q.coeff({v: 2}) if v in q.vars else 0)
            else:
                mono = {v: 1, w: 1}
                c = q.coeff(mono) if v in q.vars and w in q.vars else 0
                m[i][j] = normalize(Fraction(1, 2) * c) if c else Fraction(0)
    return m


def _linear(coeffs, variables) -> MPoly:
    out = MPoly.zero(tuple(variables))
    for c, v in zip(coeffs, variables):
        if c:
            out = out + MPoly.var(v, tuple(variables)) * MPoly.const(c, tuple(variables))
    return out


@dataclass(frozen=True)
class QuadAnalysis:
    rank: int
    matrix: list = field(default_factory=list)
    square: tuple = None   # (c, L): q = c * L^2, L with first coefficient 1
    factors: tuple = None  # (c, L1, L2): q = c * L1 * L2

    def __str__(self):
        if self.square:
            c, lin = self.square
            return f"rank 1: ({scalar_str(c)})*({lin})^2"
        if self.factors:
            c, l1, l2 = self.factors
            return f"rank 2: ({scalar_str(c)})*({l1})*({l2})"
        return f"rank {self.rank}"


def _normalize_first(coeffs):
    lead = next(c for c in coeffs if c)
    return [normalize(c / lead) for c in coeffs], lead


def quad_form_analyze(q: MPoly, variables=None, radical_name="r") -> QuadAnalysis:
    variables = tuple(variables or q.vars)
    if q and not all(sum(e[q.vars.index(v)] for v in variables if v in q.vars) == 2 for e in q.terms):
        raise ValueError("not a quadratic form in the given variables")
    m = sym_matrix(q, variables)
    r = rank(m)
    if r == 1:
        i = next(k for k in range(len(variables)) if m[k][k])
        coeffs, lead = _normalize_first(m[i])
        c = normalize(lead * lead / m[i][i])
        return QuadAnalysis(1, m, square=(c, _linear(coeffs, variables)))
    if r == 2:
        return QuadAnalysis(2, m, factors=_split_rank2(q, m, variables, radical_name))
    return QuadAnalysis(r, m)


def _split_rank2(q, m, variables, radical_name):
    n = len(variables)
    diag = [k for k in range(n) if m[k][k]]
    if not diag:
        # every term mixed; rank 2 forces one variable to divide all terms
        for k, v in enumerate(variables):
            other = [m[k][j] * 2 for j in range(n)]
            cand = _linear(other, variables)
            lv = MPoly.var(v, variables)
            if lv * cand == q.with_vars(variables):
                coeffs, lead = _normalize_first(other)
                return (lead, lv, _linear(coeffs, variables))
        return None
    i = diag[0]
    a = m[i][i]
    # a*q = (row_i . x)^2 - D, with D a binary form of rank 1 in the others
    row = m[i]
    rest = [k for k in range(n) if k != i]
    dmat = [[normalize(row[j] * row[k] - a * m[j][k]) for k in rest] for j in rest]
    j0 = next((j for j in range(len(rest)) if dmat[j][j]), None)
    if j0 is None:
        return None
    dlead = dmat[j0][j0]
    mcoeffs = [normalize(x / dlead) for x in dmat[j0]]  # D = dlead * (mcoeffs . x_rest)^2
    s = scalar_sqrt(dlead)
    if s is None:
        s = QuadExt.root(Radical(radical_name, dlead))
    full = [Fraction(0)] * n
    for k, c in zip(rest, mcoeffs):
        full[k] = c
    l1 = [normalize(row[k] - s * full[k]) for k in range(n)]
    l2 = [normalize(row[k] + s * full[k]) for k in range(n)]
    c1, lead1 = _normalize_first(l1)
    c2, lead2 = _normalize_first(l2)
    const = normalize(lead1 * lead2 / a)
    return (const, _linear(c1, variables), _linear(c2, variables))


# plane germs


@dataclass(frozen=True)
class SingClass:
    kind: str
    witness: dict = field(default_factory=dict)

    def __str__(self):
        w = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"{self.kind} ({w})" if w else self.kind


def classify_plane_germ(f, variables=None) -> SingClass:
    """Smooth, A1, A2, A3 or D4 for a germ at the origin in two variables."""
    poly = f.poly if isinstance(f, Germ) else f
    variables = tuple(variables or (f.variables if isinstance(f, Germ) else poly.vars))
    if len(variables) != 2:
        raise ValueError("need exactly two variables")
    poly = poly.with_vars(variables)
    if not poly:
        raise ValueError("zero germ")
    if poly.homogeneous_part(0):
        return SingClass(SMOOTH, {"note": "germ does not pass through the origin"})
    x, y = variables
    lin = poly.homogeneous_part(1)
    if lin:
        return SingClass(SMOOTH, {"linear": str(lin)})
    quad = poly.homogeneous_part(2)
    a, b, c = (normalize(quad.coeff({x: 2})), normalize(quad.coeff({x: 1, y: 1})), normalize(quad.coeff({y: 2})))
    disc = normalize(b * b - 4 * a * c)
    if quad and disc:
        return SingClass(A1, {"quadratic": str(quad), "discriminant": scalar_str(disc)})
    if not quad:
        cub = poly.homogeneous_part(3)
        k = [normalize(cub.coeff({x: 3 - i, y: i})) for i in range(4)]
        ca, cb, cc, cd = k
        cdisc = normalize(18 * ca * cb * cc * cd - 4 * cb ** 3 * cd + cb * cb * cc * cc - 4 * ca * cc ** 3 - 27 * ca * ca * cd * cd)
        if cub and cdisc:
            return SingClass(D4, {"cubic": str(cub), "cubic_discriminant": scalar_str(cdisc)})
        return SingClass(UNCLASSIFIED, {"cubic": str(cub), "cubic_discriminant": scalar_str(cdisc)})
    return _classify_square(poly, quad, variables)


def _classify_square(poly, quad, variables):
    qa = quad_form_analyze(quad, variables)
    cst, lin = qa.square
    lc = linear_coefficients(lin, variables)
    root = scalar_sqrt(cst)
    if root is not None:
        lc = [normalize(root * c) for c in lc]
        cst = Fraction(1)
    # other coordinate: first variable not proportional to L
    other = next(i for i in range(2) if lc[1 - i])
    j = 1 - other  # L solved for the variable at index j
    names = ("v", "s")
    v, s = MPoly.var("v", names), MPoly.var("s", names)
    # x_other = s, x_j = (v - lc[other] * s) / lc[j]
    images = {variables[other]: s, variables[j]: (v - s * MPoly.const(lc[other], names)) / lc[j]}
    g = poly.substitute(images).with_vars(names)
    gamma = normalize(g.coeff({"s": 3}))
    vsq = normalize(g.coeff({"v": 2}))
    wit = {"square": f"({scalar_str(cst)})*({_linear(lc, variables)})^2", "other": variables[other]}
    if gamma:
        wit["gamma"] = scalar_str(gamma)
        return SingClass(A2, wit)
    beta = normalize(g.coeff({"s": 4}))
    c1 = normalize(g.coeff({"v": 1, "s": 2}))
    beta_eff = normalize(beta - c1 * c1 / (4 * vsq))
    wit.update(beta=scalar_str(beta_eff), transformed=str(g))
    if beta_eff:
        return SingClass(A3, wit)
    return SingClass(UNCLASSIFIED, wit)


def quadratic_discriminant(poly: MPoly, variables=None):
    variables = tuple(variables or poly.vars)
    x, y = variables
    quad = poly.with_vars(variables).homogeneous_part(2)
    a, b, c = (quad.coeff({x: 2}), quad.coeff({x: 1, y: 1}), quad.coeff({y: 2}))
    return normalize(b * b - 4 * a * c)


# parameter analyses for pencils of quadratic forms


def param_matrix(q: MPoly, variables, param: str):
    """Symmetric matrix of a quadratic form whose coefficients involve param."""
    n = len(variables)
    pv = (param,)
    m = [[MPoly.zero(pv) for _ in range(n)] for _ in range(n)]
    idx = [q.vars.index(v) for v in variables]
    pi = q.vars.index(param)
    for e, c in q.terms.items():
        degs = [e[k] for k in idx]
        if sum(degs) != 2:
            raise ValueError("not quadratic in the given variables")
        mono = MPoly._raw(pv, {(e[pi],): c})
        hit = [k for k in range(n) for _ in range(degs[k])]
        i, j = hit
        if i == j:
            m[i][i] = m[i][i] + mono
        else:
            half = mono / 2
            m[i][j] = m[i][j] + half
            m[j][i] = m[j][i] + half
    return m


def rank_one_values(q: MPoly, variables, param: str):
    """Values of param (in Q(u)) where the form has rank at most one."""
    m = param_matrix(q, variables, param)
    n = len(variables)
    g = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(k + 1, n):
                    minor = m[i][k] * m[j][l] - m[i][l] * m[j][k]
                    if minor:
                        coeffs = minor.univariate_coeffs(param)
                        g = gcd_coeffs(g, coeffs) if g else gcd_coeffs(coeffs, coeffs)
    if len(g) != 2:
        return [] if len(g) < 2 else None
    return [normalize(-g[0] / g[1])]


def _kernel_vector(m):
    from .exactalg import nullspace

    ns = nullspace(m)
    return ns[0] if len(ns) == 1 else None


def _eval_form(m, v):
    n = len(v)
    return normalize(sum((m[i][j] * v[i] * v[j] for i in range(n) for j in range(n)), Fraction(0)))


def _binary_resultant(f, g):
    a1, b1, c1 = f
    a2, b2, c2 = g
    return normalize((a1 * c2 - a2 * c1) ** 2 - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1))


def common_component_condition(q1: MPoly, q2: MPoly, variables) -> Condition:
    """Where two rank-2 ternary quadratic forms share a linear factor.

    With distinct vertices a shared line is their join, which lies on q1 iff
    q1 vanishes at the other vertex.  With a common vertex the line pairs are
    compared on a line avoiding it, via the resultant of two binary forms.
    """
    m1, m2 = sym_matrix(q1, variables), sym_matrix(q2, variables)
    s1, s2 = _kernel_vector(m1), _kernel_vector(m2)
    if s1 is None or s2 is None:
        raise ValueError("forms are not of rank 2")
    cross = [normalize(s1[1] * s2[2] - s1[2] * s2[1]), normalize(s1[2] * s2[0] - s1[0] * s2[2]),
             normalize(s1[0] * s2[1] - s1[1] * s2[0])]
    if any(cross):
        if vanishing_condition(cross).kind != "never":
            raise ValueError("vertices coincide for special u")
        return vanishing_condition([_eval_form(m1, s2), _eval_form(m2, s1)])
    k = next(i for i in range(3) if s1[i])
    i, j = [t for t in range(3) if t != k]

    def binary(m):
        return (m[i][i], 2 * m[i][j], m[j][j])

    return vanishing_condition([_binary_resultant(binary(m1), binary(m2))])
