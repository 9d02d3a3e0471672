# src/polyring/factor.py
import logging
from typing import List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from src.polyring.ring import Polynomial, format_polynomial

logger = logging.getLogger(__name__)


def _used_variables(f: Polynomial) -> List[int]:
    return [v for v in range(f.ring.ngens) if any(m[v] for m in f.itermonoms())]


def degree(f: Polynomial) -> int:
    return max(sum(m) for m in f.itermonoms())


def factor_sort_key(f: Polynomial) -> Tuple[int, int, str]:
    return (degree(f), len(f), format_polynomial(f))


def factor_with_multiplicities(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Monic irreducible factors of ``f`` over ``QQ`` with multiplicities.

    Factoring happens in the subring of the variables ``f`` actually uses.
    """
    if not f:
        raise ValueError("Cannot factor the zero polynomial")
    if f.is_ground:
        return []
    ring = f.ring
    used = _used_variables(f)
    if degree(f) == 1:
        return [(f.monic(), 1)]
    if len(f) == 1:
        monom = f.LM
        return [(ring.gens[v], monom[v]) for v in used]
    small = PolyRing(tuple(ring.symbols[v] for v in used), QQ)
    _, factors = f.set_ring(small).factor_list()
    result = []
    for factor, multiplicity in factors:
        g = factor.set_ring(ring)
        if not g.is_ground:
            result.append((g.monic(), multiplicity))
    return sorted(result, key=lambda fm: factor_sort_key(fm[0]))


def factor_split(f: Polynomial) -> List[Polynomial]:
    """Distinct monic non-constant factors of ``f``."""
    seen = []
    for g, _ in factor_with_multiplicities(f):
        if g not in seen:
            seen.append(g)
    return seen


def is_split(f: Polynomial) -> bool:
    """``f`` has two distinct factors or a repeated one."""
    factors = factor_with_multiplicities(f)
    return len(factors) > 1 or any(m > 1 for _, m in factors)
