"""Loader for the catalog text file and typed access to its entries."""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..exactalg import MPoly, Radical, SpecializationError, parse, parse_scalar, specialize
from ..torusgeom import COORDS

ZETA_SLOTS = ("g9", "g10", "g11", "g12", "g13", "g14", "g15", "g15p",
              "g16", "g17", "g18", "g19", "g20", "g21")
ZETA_WEIGHTS = (9, 10, 11, 12, 13, 14, 15, 15, 16, 17, 18, 19, 20, 21)
GAMMA_SLOTS = ("h3", "h5", "h6", "h7", "h8", "h9", "h10", "h11", "h12", "h13", "h15")
GAMMA_WEIGHTS = (3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15)
PRODUCT_SLOTS = ("g9", "g11", "g12", "g13", "g14", "g15", "g16", "g17", "g18", "g19", "g21")
FACTOR_SLOTS = ("p9", "p10", "p11", "p12", "p13", "p14", "p15", "p15p")


def slot_label(name: str) -> str:
    """'g15p' -> "15'", 'g9' -> '9'."""
    core = name.lstrip("ghp")
    return core[:-1] + "'" if core.endswith("p") else core


def zeta_mirror_index(i: int) -> int:
    """Slot index of g_{30-w} for slot i; both weight-15 slots are fixed."""
    name = ZETA_SLOTS[i]
    if name in ("g15", "g15p"):
        return i
    return ZETA_SLOTS.index(f"g{30 - int(name[1:])}")


def mirror_zeta_vector(vec):
    return tuple(vec[zeta_mirror_index(i)] for i in range(len(vec)))


class UnknownName(KeyError):
    pass


@dataclass(frozen=True)
class NamedCurve:
    name: str
    params: tuple
    coords: tuple  # MPolys in params

    def at(self, values: dict):
        return tuple(c.evaluate(values) for c in self.coords)


@dataclass(frozen=True)
class Catalog:
    polys: dict
    curves: dict
    points: dict
    images: dict
    scalars: dict
    radicals: dict
    claims: dict
    prefactors: dict
    source: str

    def get(self, name: str):
        for table in (self.polys, self.curves, self.points, self.images, self.scalars, self.radicals):
            if name in table:
                return table[name]
        if name.startswith("claim_") and name[6:] in self.claims:
            return self.claims[name[6:]]
        raise UnknownName(name)

    def names(self):
        out = []
        for table in (self.polys, self.curves, self.points, self.images, self.scalars, self.radicals):
            out.extend(table)
        out.extend("claim_" + k for k in self.claims)
        return sorted(out)

    def text_of(self, name: str) -> str:
        """The catalog source line for a name, as stored."""
        for line in self.source.splitlines():
            if line.split("=", 1)[0].strip() == name:
                return line.split("=", 1)[1].strip()
        raise UnknownName(name)

    def zeta(self):
        return [self.polys[s] for s in ZETA_SLOTS]

    def gamma(self):
        return [self.polys[s] for s in GAMMA_SLOTS]


def _section_vars(section: str):
    if ":" not in section:
        return section.strip(), ()
    kind, vs = section.split(":", 1)
    return kind.strip(), tuple(vs.split())


def _split(value: str):
    return [v.strip() for v in value.split(";")]


def load_catalog_text(text: str) -> Catalog:
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",), comment_prefixes=("#",))
    cp.optionxform = str
    cp.read_string(text)
    if cp.get("meta", "format", fallback=None) != "1":
        raise ValueError("unsupported catalog format")
    radicals = {}
    for name, expr in cp.items("radicals"):
        radicals[name] = Radical(name, parse_scalar(expr))
    polys, curves, points, images, scalars, claims, prefactors = {}, {}, {}, {}, {}, {}, {}
    for section in cp.sections():
        kind, variables = _section_vars(section)
        items = [(k, v) for k, v in cp.items(section)]
        if kind in ("forms", "binary", "local"):
            for name, expr in items:
                polys[name] = parse(expr, variables, radicals, polys)
        elif kind == "factor_claims":
            for name, expr in items:
                claims[name] = parse(expr, variables, radicals, polys)
        elif kind == "factor_prefactors":
            for name, expr in items:
                prefactors[name] = parse(expr, variables, radicals, polys)
        elif kind == "curves":
            for name, expr in items:
                coords = tuple(parse(c, variables, radicals, polys) for c in _split(expr))
                curves[name] = NamedCurve(name, variables, coords)
        elif kind == "points":
            for name, expr in items:
                points[name] = tuple(parse_scalar(c, radicals) for c in _split(expr))
        elif kind == "images":
            for name, expr in items:
                images[name] = tuple(parse_scalar(c, radicals) for c in _split(expr))
        elif kind == "scalars":
            for name, expr in items:
                scalars[name] = parse_scalar(expr, radicals)
    return Catalog(polys, curves, points, images, scalars, radicals, claims, prefactors, text)


@lru_cache(maxsize=1)
def catalog() -> Catalog:
    text = resources.files(__package__).joinpath("catalog.ini").read_text(encoding="utf-8")
    return load_catalog_text(text)


def get(name: str):
    return catalog().get(name)


def forms_point(values) -> dict:
    return dict(zip(COORDS, values))


def psi_generator(branch: str = "+", u=None):
    """Generator of the degree-10 curves over Q(u)(theta), or at a rational u.

    At u = 2/3 theta is the root 1; at u = -1/3 it is 0.
    """
    name = {"+": "Psi", "-": "Psi_prime"}[branch]
    pt = catalog().points[name]
    if u is None:
        return pt
    u = Fraction(u)
    if u in (0, 1):
        raise ValueError("u must avoid 0 and 1")
    try:
        return tuple(specialize(c, u, root_sign=1) for c in pt)
    except SpecializationError as exc:  # pragma: no cover - excluded above
        raise ValueError(str(exc)) from exc


def mpoly_point(values):
    return tuple(MPoly.const(v) for v in values)
