# src/polyring/ring.py
"""Polynomial rings ``QQ[t1, …, tn]`` and the textual polynomial format.

Polynomials are sympy ``PolyElement`` values: sparse maps from exponent tuples
to exact rationals. Text uses ``t1 … tn`` and ``^`` for powers.
"""
import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import Symbol, symbols
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from src.polyring.orders import DEGREVLEX, EliminationOrder, MonomialOrder

logger = logging.getLogger(__name__)

Polynomial = PolyElement
Monomial = Tuple[int, ...]

VARIABLE_PREFIX = "t"


@lru_cache(maxsize=None)
def variables(nvars: int) -> Tuple[Symbol, ...]:
    return tuple(symbols(f"{VARIABLE_PREFIX}1:{nvars + 1}"))


def polynomial_ring(
    nvars: int, order: Union[MonomialOrder, str] = DEGREVLEX
) -> PolyRing:
    if nvars <= 0:
        raise ValueError("A polynomial ring needs at least one variable")
    if isinstance(order, str):
        order = MonomialOrder.parse(order)
    return PolyRing(variables(nvars), QQ, order.to_sympy(nvars))


def with_order(ring: PolyRing, order: MonomialOrder) -> PolyRing:
    return ring.clone(order=order.to_sympy(ring.ngens))


def order_of(ring: PolyRing) -> MonomialOrder:
    if isinstance(ring.order, EliminationOrder):
        return MonomialOrder("elimination", ring.order.block)
    for candidate in (DEGREVLEX, MonomialOrder("lex")):
        if ring.order == candidate.to_sympy(ring.ngens):
            return candidate
    raise ValueError(f"Ring order {ring.order} has no name")


def to_ring(polys: Iterable[Polynomial], ring: PolyRing) -> List[Polynomial]:
    return [p.set_ring(ring) for p in polys]


def total_degree(monom: Monomial) -> int:
    return sum(monom)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    names = {str(s): s for s in ring.symbols}
    try:
        expr = parse_expr(text.replace("^", "**"), local_dict=names, evaluate=True)
        return ring.from_expr(expr)
    except Exception as e:
        raise ValueError(f"Cannot parse polynomial {text!r}: {e}") from e


def format_polynomial(p: Polynomial) -> str:
    return str(p).replace("**", "^")


def coordinate_vector(
    ring: PolyRing, entries: Sequence[Union[int, Polynomial]]
) -> Tuple[Polynomial, ...]:
    return tuple(ring(e) for e in entries)
