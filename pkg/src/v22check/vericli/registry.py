"""The check registry: stable ids, descriptions and paper locations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import checks as C

PARAM, FIXED, CONSTANT = "param", "fixed", "constant"


@dataclass(frozen=True)
class CheckSpec:
    id: str
    description: str
    paper_ref: str
    fn: Callable
    mode: str = PARAM
    fixed_u: Optional[Fraction] = None


def _spec(cid, description, ref, fn, mode=PARAM, fixed_u=None):
    return CheckSpec(cid, description, ref, fn, mode, None if fixed_u is None else Fraction(fixed_u))


_FACTOR_SLOTS = ("p9", "p10", "p11", "p12", "p13", "p14", "p15", "p15p")

_SPECS = [
    _spec("catalog-weights", "h/g weight table under the action", "§2, eqs. action, H-3, 10-15-20",
          C.catalog_part("catalog-weights"), CONSTANT),
    _spec("catalog-involution", "iota maps h_i to h_{18-i} and g_i to g_{30-i}", "§2, eq. involution",
          C.catalog_part("catalog-involution"), CONSTANT),
    _spec("catalog-gamma", "Gamma lies on Q_u and on S", "§2, curve Gamma and surface S",
          C.catalog_part("catalog-gamma"), CONSTANT),
    _spec("catalog-generators", "named generator points lie on Q_u", "§3, eqs. Delta, Upsilon; Lemmas 3.3, 3.5",
          C.catalog_part("catalog-generators"), CONSTANT),
    _spec("catalog-products", "product quintics are f times a cubic", "§2, eq. 3-5-6-7-8-9-10-11-12-13-15",
          C.catalog_part("catalog-products"), CONSTANT),
    _spec("catalog-g15p-value", "value of g15' at e_y + e_w", "§2, after eq. 10-15-20",
          C.catalog_part("catalog-g15p-value"), CONSTANT),
    _spec("quadric-smooth", "Q_u is smooth for u outside {0, 1}", "§2, eq. quadric", C.quadric_smooth),
    _spec("lemma-2.1-singular-along-gamma", "the 14 quintic surfaces are singular along Gamma with multiplicity 2",
          "Lemma 2.1", C.singular_along_gamma),
    _spec("lemma-2.2-lines", "limit points of l1, l2 and the T_i membership table", "Lemma 2.2", C.lines),
    _spec("remark-2.6-conic", "zeta of S is a conic in the span of T10, T20, T15'", "Remark 2.6", C.conic_pattern),
    _spec("lemma-2.7-fixed-points", "fixed points of the action on Q_u", "Lemma 2.7", C.fixed_points),
    _spec("lemma-3.1-orbit-degree", "orbit-closure degrees of Gamma, zeta(Delta), zeta(Upsilon)", "Lemma 3.1",
          C.orbit_degree),
    _spec("lemma-3.2-curves-in-S", "orbits in S: P+-, the conic, Theta_{1,0}", "Lemma 3.2", C.curves_in_s),
    _spec("lemma-3.3-iota-fixed", "iota-fixed points on Q_u", "Lemma 3.3", C.iota_fixed),
]
for _slot in _FACTOR_SLOTS:
    _SPECS.append(_spec(f"lemma-3.4-factor-{_slot}", f"factorization of {_slot} on the conic", "Lemma 3.4 proof",
                        C.factor_claim(_slot)))
_SPECS += [
    _spec("lemma-3.4-coprimality", "pairwise coprimality of q0..q6 and the four exceptional loci",
          "Lemma 3.4 proof", C.coprimality),
    _spec("lemma-3.4-zero-patterns", "vanishing slots of zeta on Delta, Upsilon and Theta+-",
          "Lemma 3.4; eqs. Delta-polynomials, Upsilon-polynomials", C.zero_patterns),
    _spec("lemma-3.4-degrees", "degrees 12, 4, 6 of zeta(Theta+-), zeta(Delta), zeta(Upsilon)",
          "Lemma 3.4; eqs. Delta, Upsilon", C.degrees_10_12),
    _spec("lemma-3.4-random-Theta", "sampled conic points have zeta-degree 10 or 12", "Lemma 3.4",
          C.sample_theta),
    _spec("lemma-3.5-two-cubics", "N15 in the chart meets z = y^3 in two cubics", "Lemma 3.5 proof",
          C.two_cubics),
    _spec("lemma-3.5-psi-on-N3-N15", "Psi and Psi' lie on Q_u, N3 and N15", "Lemma 3.5", C.psi_on_n3_n15),
    _spec("lemma-3.5-psi-not-in-S", "Psi is never in S; Psi' is in S only at u = 2/3", "Lemma 3.5",
          C.psi_not_in_s),
    _spec("lemma-3.5-psi-degree", "zeta(Psi) and zeta(Psi') have degree 10", "Lemma 3.5", C.psi_degree),
    _spec("lemma-3.5-psi-equal", "Psi = Psi' exactly when theta = 0", "Lemma 3.5", C.psi_equal),
    _spec("lemma-3.5-tangency", "N3 and N15 tangent at (1,1,1,1,1) exactly at u = 2/3", "Lemma 3.5 proof",
          C.tangency_n3_n15),
    _spec("lemma-3.5-S-u-2/3", "S is transversal to N3 and N15 at u = 2/3", "Lemma 3.5 proof",
          C.s_vs_n15_at_two_thirds, FIXED, Fraction(2, 3)),
    _spec("lemma-3.5-u-minus-1/3", "N3 and N15 tangent at Psi = Psi' for u = -1/3", "Lemma 3.5 proof",
          C.tangent_at_minus_third, FIXED, Fraction(-1, 3)),
    _spec("degree-ledger", "degree bookkeeping 10 + 10 + 2 = 22", "§3, eq. T9-T21", C.degree_bookkeeping),
    _spec("lemma-4.1-tangency", "N5/N13 tangent exactly at u = 2; N8/N10 never", "Lemma 4.1 proof",
          C.tangency_n5_n13),
    _spec("lemma-4.1-u-2", "N5 and N13 transversal at (1:0:2:0:2) for u = 2", "Lemma 4.1 proof",
          C.delta_transversal_at_2, FIXED, Fraction(2)),
    _spec("remark-4.2-mu", "quadratic part of M15^mu and its rank-one member", "Remark 4.2", C.m15_family),
    _spec("lemma-4.3-hirzebruch", "Hirzebruch arithmetic on E over Q_u", "Lemma 4.3; eq. curve-degree-intersection",
          C.hirzebruch_q, CONSTANT),
    _spec("remark-4.5-u-minus-2", "M10 and M20 share a linear factor exactly at u = -2", "Remark 4.5",
          C.u_minus_2),
    _spec("section-5-pencil", "the pencil of g15 and g15' through Delta and Upsilon", "§5, pencil P",
          C.containment),
    _spec("lemma-5.1-germ", "germ of M15' at Delta: A1, D4 at u = 2", "Lemma 5.1", C.germ_51),
    _spec("lemma-5.2-germ", "germ of M15'' at Upsilon: A1, A3 at u = 3/4", "Lemma 5.2", C.germ_52),
    _spec("lemma-5.2-germ-u-3/4", "tacnode A3 at u=3/4", "Lemma 5.2", C.germ_52_tacnode, FIXED, Fraction(3, 4)),
    _spec("chow-e-cube", "E^3 for the four blowups", "§6 display",
          C.chow_part("e-cube-Q-Gamma", "e-cube-V-C4", "e-cube-V-C6", "e-cube-V-C2"), CONSTANT),
    _spec("chow-minus-k-cube", "(-K)^3 = 12 and 8 after blowing up C4 and C6", "§6 display",
          C.chow_part("minus-k-cube-C4", "minus-k-cube-C6", "minus-k-cube-C2"), CONSTANT),
    _spec("lemma-6.3-triples", "18n - 6m and 14n - 8m", "Lemma 6.3",
          C.chow_part("K2-F-C4", "HE-F-T15p-C4", "K2-T15p-C4-mult3"), CONSTANT),
    _spec("section-6-T15pp-contracted", "(H-E)^2(H-2E) = 0 for C6", "§6",
          C.chow_part("K2-T15pp-C6"), CONSTANT),
    _spec("lemma-6.4-hirzebruch", "Hirzebruch bounds on E over V_u", "Lemma 6.4",
          C.chow_part("kappa-V-C4", "antican-on-E-C4", "two-section-class", "two-section-dot-s", "bound-n-2",
                      "antican-ample-on-E-C4"), CONSTANT),
    _spec("lemma-7.1-ledger", "m <= 5/2 and the degree bounds 2 + kappa, 1 + kappa", "Lemma 7.1",
          C.chow_part("bound-m-5/2", "mult-trigger-5/4", "hb-P1xP1-bound", "hb-F2-bound"), CONSTANT),
    _spec("lemma-7.2-ledger", "10 - 10m and m <= 1", "Lemma 7.2",
          C.chow_part("HE-D-T15pp-C6", "bound-m-1"), CONSTANT),
    _spec("lemma-7.4-ledger", "14 - 8m, m <= 7/4, 3 eps - 2 and 2 eps - 1", "Lemma 7.4",
          C.chow_part("HE-D-T15p-C4-mult3", "bound-m-7/4", "eps-m-below-2", "mult-D-prime", "mult-3eps-2",
                      "class-2eps-1"), CONSTANT),
]

REGISTRY = {s.id: s for s in sorted(_SPECS, key=lambda s: s.id)}


def list_checks():
    return [(s.id, s.description, s.paper_ref) for s in REGISTRY.values()]


def get_spec(cid: str) -> CheckSpec:
    return REGISTRY[cid]
