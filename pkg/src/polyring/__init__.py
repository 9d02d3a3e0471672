from src.polyring.factor import factor_split
from src.polyring.groebner import (
    Budget,
    buchberger,
    divide,
    is_groebner_basis,
    normal_form,
    s_polynomial,
)
from src.polyring.ideal import (
    Ideal,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_membership,
    krull_dimension,
    saturate,
)
from src.polyring.orders import DEGREVLEX, LEX, MonomialOrder
from src.polyring.ring import (
    Monomial,
    Polynomial,
    format_polynomial,
    parse_polynomial,
    polynomial_ring,
)

__all__ = [
    "DEGREVLEX",
    "LEX",
    "Budget",
    "Ideal",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "buchberger",
    "divide",
    "eliminate",
    "factor_split",
    "format_polynomial",
    "ideal_contains",
    "ideal_equal",
    "ideal_membership",
    "is_groebner_basis",
    "krull_dimension",
    "normal_form",
    "parse_polynomial",
    "polynomial_ring",
    "s_polynomial",
    "saturate",
]
