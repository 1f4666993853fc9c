from fractions import Fraction

import pytest
import sympy

import oracle
from v22check.exactalg import U, UndeclaredVariable, normalize
from v22check.paperdata import (
    GAMMA_SLOTS,
    ZETA_SLOTS,
    UnknownName,
    catalog,
    get,
    load_catalog_text,
    mirror_zeta_vector,
    psi_generator,
    slot_label,
    verify_catalog,
    zeta_mirror_index,
)
from v22check.torusgeom import COORDS

from strategies import poly_to_sympy


def test_catalog_self_checks_pass():
    for res in verify_catalog():
        assert res.status == "PASS", (res.id, res.witness)


def test_parsed_polynomials_agree_with_sympy_reading():
    cat = catalog()
    for name in GAMMA_SLOTS + ZETA_SLOTS + ("quadric", "f", "g15pp", "q0", "q6"):
        ours = poly_to_sympy(cat.polys[name])
        assert sympy.expand(ours - oracle.expr(name)) == 0, name


def test_quadric_contains_gamma_symbolically():
    s0, s1 = sympy.symbols("s0 s1")
    gamma = [s0 ** 6, s0 ** 5 * s1, s0 ** 3 * s1 ** 3, s0 * s1 ** 5, s1 ** 6]
    q = oracle.expr("quadric").subs(dict(zip(oracle.COORDS, gamma)), simultaneous=True)
    assert sympy.expand(q) == 0


def test_slot_labels_and_mirror():
    assert slot_label("g15p") == "15'"
    assert slot_label("g9") == "9"
    i9 = ZETA_SLOTS.index("g9")
    assert ZETA_SLOTS[zeta_mirror_index(i9)] == "g21"
    assert zeta_mirror_index(ZETA_SLOTS.index("g15p")) == ZETA_SLOTS.index("g15p")
    v = tuple(range(14))
    assert mirror_zeta_vector(mirror_zeta_vector(v)) == v


def test_get_and_unknown_name():
    assert get("f") == catalog().polys["f"]
    assert get("claim_p9") == catalog().claims["p9"]
    with pytest.raises(UnknownName):
        get("no_such_polynomial")


def test_psi_generator_branches():
    pt = psi_generator("+")
    q = catalog().polys["quadric"]
    assert normalize(q.evaluate(dict(zip(COORDS, pt)))) == 0
    assert psi_generator("+", Fraction(-1, 3)) == catalog().points["Psi_minus_third"]
    with pytest.raises(ValueError):
        psi_generator("+", 1)


def test_loader_rejects_undeclared_variables():
    src = catalog().source
    bad = src.replace("f = x*w - y*t", "f = x*w - y*q")
    assert bad != src
    with pytest.raises(UndeclaredVariable):
        load_catalog_text(bad)


def test_loader_round_trips_the_shipped_source():
    again = load_catalog_text(catalog().source)
    assert again.polys == catalog().polys


def test_g15pp_is_in_the_pencil():
    p = catalog().polys
    assert p["g15pp"] == p["g15p"] + p["g15"] * U
