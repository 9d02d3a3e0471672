# src/embedding/admissibility.py
import logging
from itertools import combinations
from typing import Optional, Tuple

from src.embedding.preembedding import PreEmbedding, determinant, pairwise_cross_products
from src.polyring.groebner import Budget
from src.polyring.ideal import Ideal

logger = logging.getLogger(__name__)


def coinciding_pair(
    p: Ideal, xi: PreEmbedding, budget: Optional[Budget] = None
) -> Optional[Tuple[int, int]]:
    """First pair of points whose coordinates become proportional modulo ``p``."""
    for pair, cp in pairwise_cross_products(xi):
        if all(not p.reduce(c, budget) for c in cp):
            return pair
    return None


def noncollinear_triple(
    p: Ideal, xi: PreEmbedding, budget: Optional[Budget] = None
) -> Optional[Tuple[int, int, int]]:
    for a, b, c in combinations(range(len(xi)), 3):
        if p.reduce(determinant(xi.points[a], xi.points[b], xi.points[c]), budget):
            return (a, b, c)
    return None


def is_admissible(p: Ideal, xi: PreEmbedding, budget: Optional[Budget] = None) -> bool:
    """Points stay pairwise distinct and not all collinear on the component."""
    if p.is_unit(budget):
        raise ValueError("Admissibility is undefined for the unit ideal")
    pair = coinciding_pair(p, xi, budget)
    if pair is not None:
        logger.debug(f"points {pair[0]} and {pair[1]} coincide")
        return False
    if noncollinear_triple(p, xi, budget) is None:
        logger.debug("all points collinear")
        return False
    return True
