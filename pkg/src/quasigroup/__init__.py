from src.quasigroup.catalog import (
    catalog_entry,
    catalog_name,
    load_catalog,
    read_table,
    short_name,
)
from src.quasigroup.latin_square import (
    Isostrophism,
    LatinSquare,
    apply_isostrophism,
    conjugate,
    is_group,
    is_loop,
    isotope,
    left_divide,
    multiply,
    principal_isotope,
    right_divide,
)
from src.quasigroup.subsquares import (
    SubsquareTriple,
    all_proper_subsquares,
    brute_force_subsquares,
    generated_subsquare,
    is_subsquare,
)

__all__ = [
    "Isostrophism",
    "LatinSquare",
    "SubsquareTriple",
    "all_proper_subsquares",
    "apply_isostrophism",
    "brute_force_subsquares",
    "catalog_entry",
    "catalog_name",
    "conjugate",
    "generated_subsquare",
    "is_group",
    "is_loop",
    "is_subsquare",
    "isotope",
    "left_divide",
    "load_catalog",
    "multiply",
    "principal_isotope",
    "read_table",
    "right_divide",
    "short_name",
]
