"""Intrinsic consistency checks of the catalog."""

from __future__ import annotations

from ..exactalg import U, normalize
from ..results import check, combine
from ..torusgeom import COORDS, apply_involution, weight_of
from .catalog import GAMMA_SLOTS, ZETA_SLOTS, ZETA_WEIGHTS, catalog, forms_point

ON_QUADRIC = ("gamma_base", "P_plus", "P_minus", "Theta_10", "Delta", "Upsilon",
              "Psi", "Psi_prime", "e_y_w")

# g = hyperplane * f^2
DOUBLE_S = {"g12": "H_x", "g13": "H_y", "g15": "H_z", "g17": "H_t", "g18": "H_w"}


def _weights():
    cat = catalog()
    parts = []
    for name in GAMMA_SLOTS:
        w = weight_of(cat.polys[name])
        parts.append(check(f"weight-{name}", w == int(name[1:]), witness=str(w)))
    for name, want in zip(ZETA_SLOTS, ZETA_WEIGHTS):
        w = weight_of(cat.polys[name])
        parts.append(check(f"weight-{name}", w == want, witness=str(w)))
    w = weight_of(cat.polys["g15pp"])
    parts.append(check("weight-g15pp", w == 15, witness=str(w)))
    return combine("catalog-weights", parts)


def _involution():
    cat = catalog()
    p = cat.polys
    parts = []
    for name in GAMMA_SLOTS:
        i = int(name[1:])
        mirror = f"h{18 - i}"
        ok = mirror in p and apply_involution(p[name]) == p[mirror]
        parts.append(check(f"iota-{name}", ok, witness=f"{name} -> {mirror}"))
    for name in ZETA_SLOTS:
        if name in ("g15", "g15p"):
            mirror = name
        else:
            mirror = f"g{30 - int(name[1:])}"
        ok = apply_involution(p[name]) == p[mirror]
        parts.append(check(f"iota-{name}", ok, witness=f"{name} -> {mirror}"))
    for name in ("quadric", "f", "S1", "S2"):
        parts.append(check(f"iota-{name}", apply_involution(p[name]) == p[name], witness="fixed"))
    return combine("catalog-involution", parts)


def _gamma_on_q_and_s():
    cat = catalog()
    gamma = cat.curves["Gamma"]
    bind = dict(zip(COORDS, gamma.coords))
    parts = []
    for name in ("quadric", "f", "S1", "S2"):
        r = cat.polys[name].substitute(bind)
        parts.append(check(f"gamma-on-{name}", r.is_zero(), witness=str(r)))
    return combine("catalog-gamma", parts)


def _generators_on_q():
    cat = catalog()
    q = cat.polys["quadric"]
    parts = []
    for name in ON_QUADRIC:
        v = normalize(q.evaluate(forms_point(cat.points[name])))
        parts.append(check(f"on-quadric-{name}", v == 0, witness=str(v)))
    return combine("catalog-generators", parts)


def _products():
    cat = catalog()
    p = cat.polys
    f = p["f"]
    parts = []
    for k in (3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15):
        g = p[f"g{k + 6}"]
        parts.append(check(f"g{k + 6}=f*h{k}", g == f * p[f"h{k}"], witness="identity"))
    for g, hyp in DOUBLE_S.items():
        parts.append(check(f"{g}={hyp}*f^2", p[g] == p[hyp] * f * f, witness="identity"))
    gpp = p["g15pp"]
    rhs = p["g15p"] + p["g15"] * U
    parts.append(check("g15pp=u*g15+g15p", gpp == rhs, witness=str(gpp - rhs)))
    return combine("catalog-products", parts)


def _value_at_e_y_w():
    cat = catalog()
    pt = forms_point(cat.points["e_y_w"])
    v15 = normalize(cat.polys["g15"].evaluate(pt))
    v15p = normalize(cat.polys["g15p"].evaluate(pt))
    parts = [
        check("g15-at-e_y+e_w", v15 == 0, witness=str(v15)),
        check("g15p-at-e_y+e_w", v15p != 0, witness=str(v15p),
              note=f"value is {v15p}, printed as 1; only nonvanishing is used"),
    ]
    return combine("catalog-g15p-value", parts)


def verify_catalog():
    return [_weights(), _involution(), _gamma_on_q_and_s(), _generators_on_q(),
            _products(), _value_at_e_y_w()]
