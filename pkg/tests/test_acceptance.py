"""The ten acceptance criteria, each exact and each reported on one line."""

from fractions import Fraction
from itertools import combinations

import pytest

from v22check import chowcalc, curvelab, germlab
from v22check.chowcalc import E, H, Q_GAMMA, V_C2, V_C4, V_C6, cls, sym, triple
from v22check.exactalg import U, UPoly, normalize, parse
from v22check.paperdata import FACTOR_SLOTS, catalog, psi_generator
from v22check.vericli import checks

import test_curvelab
import test_exactalg
import test_germlab

BARS = ("yb", "zb", "tb")


@pytest.fixture
def report(capsys):
    def emit(n, failures):
        line = f"{'PASS' if not failures else 'FAIL'} criterion {n}"
        if failures:
            line += ": " + "; ".join(failures)
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line
    return emit


def _expect(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def _passes(failures, label, results):
    bad = [f"{r.id} ({r.witness})" for r in results if r.status != "PASS"]
    if bad:
        failures.append(f"{label}: " + ", ".join(bad))


def test_criterion_1_degree_table(report):
    pts = catalog().points
    bad = []
    _expect(bad, "Gamma", curvelab.curve_degree(pts["gamma_base"]).degree, 6)
    _expect(bad, "gamma(Theta_10)", curvelab.image_degree(curvelab.conic_point(1, 0), "gamma").degree, 12)
    for name in ("P_plus", "P_minus"):
        _expect(bad, name, curvelab.image_degree(pts[name]).degree, 12)
    for name, deg in (("Delta", 4), ("Upsilon", 6)):
        info = curvelab.image_degree(pts[name])
        _expect(bad, name, (info.degree, info.is_rational_normal), (deg, True))
    for branch in ("+", "-"):
        _expect(bad, f"Psi{branch}", curvelab.image_degree(psi_generator(branch)).degree, 10)
    report(1, bad)


def test_criterion_2_factor_table(report):
    bad = []
    table = curvelab.verify_factor_table()
    _passes(bad, "identities", table)
    want = {(0, 6): UPoly([2, -2, 1]), (1, 6): UPoly([-2, 1]), (3, 5): UPoly([1, 1]), (2, 3): UPoly([-1, 1, 1])}
    for i, j in combinations(range(7), 2):
        factors = list(curvelab.coprimality_locus(i, j)[0])
        _expect(bad, f"q{i},q{j}", factors, [want[(i, j)]] if (i, j) in want else [])
    for slot in FACTOR_SLOTS:
        if not any(slot in r.id for r in table):
            bad.append(f"no identity for {slot}")
    _expect(bad, "slots", len(FACTOR_SLOTS), 8)
    report(2, bad)


def test_criterion_3_zero_patterns(report):
    pts = catalog().points
    bad = []
    _expect(bad, "Delta", curvelab.zero_slots("zeta", pts["Delta"]),
            ("10", "11", "13", "14", "15'", "16", "17", "19", "20"))
    _expect(bad, "Upsilon", curvelab.zero_slots("zeta", pts["Upsilon"]), ("10", "12", "14", "16", "18", "20"))
    for name in ("P_plus", "P_minus"):
        _expect(bad, name, curvelab.zero_slots("zeta", pts[name]), ("15", "15'"))
    report(3, bad)


def test_criterion_4_line_membership(report):
    table = curvelab.membership_table()
    bad = []
    _expect(bad, "ell2 outside", [s for s, inside in table["ell2"].items() if not inside], ["g20", "g21"])
    mirror = {s: "g" + str(30 - int(s[1:])) if s[1:].isdigit() else s for s in table["ell2"]}
    relabeled = {mirror[s]: inside for s, inside in table["ell2"].items()}
    _expect(bad, "ell1 vs iota(ell2)", table["ell1"], relabeled)
    _passes(bad, "table", curvelab.verify_line_table())
    report(4, bad)


def test_criterion_5_singular_along_gamma(report):
    parts = checks.singular_along_gamma(None)
    bad = []
    _expect(bad, "slots", len(parts), 14)
    _passes(bad, "minors and multiplicity", parts)
    report(5, bad)


def test_criterion_6_tangency(report):
    one = (1, 1, 1)
    bad = []

    def cond(a, ma, b, mb):
        return germlab.linear_parts_proportional(checks.germ(a, ma, one), checks.germ(b, mb, one))

    c = cond("h3", 1, "h15", U ** 2)
    _expect(bad, "N3/N15", (c.kind, [str(f) for f in c.factors]), ("locus", ["3*u - 2"]))
    c = cond("h5", 1, "h13", U ** 2)
    _expect(bad, "N5/N13", (c.kind, [str(f) for f in c.factors]), ("locus", ["u - 2"]))
    _expect(bad, "N8/N10", cond("h8", U, "h10", U).kind, "never")
    _expect(bad, "S/N3", cond("f", 1, "h3", 1).kind, "never")
    report(6, bad)


def test_criterion_7_germs(report):
    bad = []
    _passes(bad, "germ on M15'", checks.germ_51(None))
    for uval in (Fraction(2), Fraction(-1), Fraction(5, 3)):
        _passes(bad, f"germ on M15' at {uval}", checks.germ_51(uval))
    _passes(bad, "germ on M15''", checks.germ_52(None))
    for uval in (Fraction(3, 4), Fraction(2), Fraction(-7)):
        _passes(bad, f"germ on M15'' at {uval}", checks.germ_52(uval))
    tac = checks.germ_52_tacnode(Fraction(3, 4))
    _passes(bad, "tacnode", tac)
    _expect(bad, "beta", tac[-1].witness, "A3 beta=-13824")
    mu = normalize(-(3 * U ** 2 + 16 * U - 16) / (4 * (U - 1) ** 2))
    _expect(bad, "rank-one mu", germlab.rank_one_values(catalog().polys["M15mu_quadratic"], BARS, "mu"), [mu])
    d10 = catalog().polys["M10_quadratic"].with_vars(BARS)
    d20 = catalog().polys["M20_quadratic"].with_vars(BARS)
    c = germlab.common_component_condition(d10, d20, BARS)
    _expect(bad, "shared factor locus", (c.kind, [str(f) for f in c.factors]), ("locus", ["u + 2"]))
    shared = parse("yb + 3*zb - 2*tb", BARS)
    for name, q in (("M10", d10), ("M20", d20)):
        if not shared.divides(q.specialize_u(-2)):
            bad.append(f"{name} at -2 not divisible by yb + 3zb - 2tb")
    report(7, bad)


def test_criterion_8_chow_values(report):
    n, m = sym("n"), sym("m")
    HE = H - E
    bad = []
    _expect(bad, "E^3", [chowcalc.e_cube(c) for c in (Q_GAMMA, V_C4, V_C6, V_C2)], [-16, -2, -4, 0])
    _expect(bad, "-K^3", [chowcalc.anticanonical_cube(c) for c in (V_C4, V_C6)], [12, 8])
    _expect(bad, "(H-E)^2(nH-mE)", triple(V_C4, HE, HE, cls(n, -m)), 18 * n - 6 * m)
    _expect(bad, "(H-E)(nH-mE)(H-2E)", triple(V_C4, HE, cls(n, -m), cls(1, -2)), 14 * n - 8 * m)
    _expect(bad, "(H-E)(H-mE)(H-2E) d=6", triple(V_C6, HE, cls(1, -m), cls(1, -2)), 10 - 10 * m)
    _expect(bad, "(H-E)^2(H-3E) d=4", chowcalc.as_number(triple(V_C4, HE, HE, cls(1, -3))), 0)
    _expect(bad, "(H-E)^2(H-2E) d=6", chowcalc.as_number(triple(V_C6, HE, HE, cls(1, -2))), 0)
    kappa = chowcalc.hb_solve_kappa(n, chowcalc.e_cube(Q_GAMMA))
    _expect(bad, "kappa", kappa, (n - 16) * Fraction(1, 2))
    gt = chowcalc.HbClass(n, 1, (n + 4) * Fraction(1, 2))
    _expect(bad, "Gamma~.s", chowcalc.hb_intersect(gt, chowcalc.section(n)), (4 - n) * Fraction(1, 2))
    anti = chowcalc.restricted_antican(Q_GAMMA, n)
    _expect(bad, "curve degree", chowcalc.as_number(chowcalc.hb_intersect(anti, gt)), 12)
    report(8, bad)


def test_criterion_9_ledger(report):
    m = sym("m")
    HE = H - E
    bad = []
    _expect(bad, "m <= 7/4", chowcalc.upper_bound(triple(V_C4, HE, cls(1, -m), cls(1, -2))), Fraction(7, 4))
    _expect(bad, "m <= 1", chowcalc.upper_bound(triple(V_C6, HE, cls(1, -m), cls(1, -2))), Fraction(1))
    ledger = {r.id: r for r in chowcalc.ledger()}
    for cid in ("bound-m-5/2", "mult-3eps-2", "class-2eps-1"):
        _passes(bad, cid, [ledger[cid]])
    eps = Fraction(5, 6)
    _expect(bad, "3eps-2", 3 * eps - 2, Fraction(1, 2))
    _expect(bad, "2eps-1", 2 * eps - 1, Fraction(2, 3))
    degs = [curvelab.image_degree(psi_generator(b)).degree for b in ("+", "-")]
    _expect(bad, "T9.T21", (degs, sum(degs) + 2), ([10, 10], 22))
    report(9, bad)


def test_criterion_10_property_suites(report):
    bad = []
    suites = [
        ("ring axioms x1000", test_exactalg.test_ring_axioms),
        ("substitution homomorphism x1000", test_exactalg.test_substitution_is_a_homomorphism),
        ("evaluation homomorphism x1000", test_exactalg.test_evaluation_and_specialization_are_homomorphisms),
        ("classifier invariance x150", test_germlab.test_classifier_is_invariant_under_coordinate_changes),
        ("Sylvester on all q-pairs", test_curvelab.test_resultants_match_sylvester_on_all_q_pairs),
    ]
    for label, fn in suites:
        try:
            fn()
        except Exception as exc:  # hypothesis re-raises the falsifying example
            bad.append(f"{label}: {type(exc).__name__}: {exc}")
    report(10, bad)
