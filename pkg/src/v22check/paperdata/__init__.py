"""Named polynomials, points and curves, parsed from a shipped text file."""

from .catalog import (
    FACTOR_SLOTS,
    GAMMA_SLOTS,
    GAMMA_WEIGHTS,
    PRODUCT_SLOTS,
    ZETA_SLOTS,
    ZETA_WEIGHTS,
    Catalog,
    NamedCurve,
    UnknownName,
    catalog,
    get,
    load_catalog_text,
    mirror_zeta_vector,
    psi_generator,
    slot_label,
    zeta_mirror_index,
)
from .selfcheck import verify_catalog

__all__ = [
    "FACTOR_SLOTS", "GAMMA_SLOTS", "GAMMA_WEIGHTS", "PRODUCT_SLOTS", "ZETA_SLOTS", "ZETA_WEIGHTS",
    "Catalog", "NamedCurve", "UnknownName", "catalog", "get", "load_catalog_text",
    "mirror_zeta_vector", "psi_generator", "slot_label", "verify_catalog", "zeta_mirror_index",
]
