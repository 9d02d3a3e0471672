# src/embedding/preembedding.py
"""Parametric point coordinates and the ideals they induce."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple, Union

from sympy.polys.rings import PolyRing

from src.exceptions import IncidenceError, InvariantViolation
from src.incidence.structure import (
    IncidenceStructure,
    Multinet,
    is_well_indexed,
    superlines,
)
from src.polyring.ideal import Ideal
from src.polyring.ring import Polynomial, coordinate_vector, polynomial_ring

logger = logging.getLogger(__name__)

Vector = Tuple[Polynomial, Polynomial, Polynomial]


@dataclass(frozen=True)
class PreEmbedding:
    """One homogeneous coordinate vector per point, over ``QQ[t1..tn]``."""

    ring: PolyRing
    points: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        for index, vector in enumerate(self.points):
            if len(vector) != 3:
                raise ValueError(f"Point {index} needs 3 coordinates, got {len(vector)}")
            if not any(vector):
                raise InvariantViolation(f"Point {index} has the zero vector")
            common = vector[0].gcd(vector[1]).gcd(vector[2])
            if not common.is_ground:
                raise InvariantViolation(
                    f"Coordinates of point {index} share the factor {common}"
                )

    def __len__(self) -> int:
        return len(self.points)

    @property
    def nvars(self) -> int:
        return self.ring.ngens


def determinant(u: Vector, v: Vector, w: Vector) -> Polynomial:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def cross_product(u: Vector, v: Vector) -> Vector:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def pairwise_cross_products(xi: PreEmbedding) -> List[Tuple[Tuple[int, int], Vector]]:
    return [
        ((p, q), cross_product(xi.points[p], xi.points[q]))
        for p, q in combinations(range(len(xi)), 2)
    ]


def _vectors(ring: PolyRing, rows: Sequence[Sequence[Union[int, Polynomial]]]) -> Tuple[Vector, ...]:
    return tuple(coordinate_vector(ring, row) for row in rows)  # type: ignore[misc]


def standard_preembedding(m: Multinet) -> PreEmbedding:
    """The 18-point coordinate table for a well-indexed order-6 multinet.

    The superline ``{0, 1, 6, 7, 12, 13}`` lies on the line at infinity; the
    last three points share coordinates with points 3..5 and 9..11 as forced
    by well-indexing.
    """
    if m.n != 6:
        raise IncidenceError(f"The standard pre-embedding needs order 6, got {m.n}")
    lines = superlines(m)
    if len(lines) != 1 or len(lines[0]) != 6:
        raise IncidenceError("The standard pre-embedding needs exactly one superline of six points")
    if not is_well_indexed(m):
        raise IncidenceError("The multinet must be well-indexed")
    ring = polynomial_ring(17)
    t = (None, *ring.gens)
    rows = [
        [1, 0, 0], [1, t[1], 0], [t[4], t[5], 1],
        [t[6], t[7], 1], [t[8], t[9], 1], [t[10], t[11], 1],
        [0, 1, 0], [1, t[2], 0], [1, 0, 1],
        [t[12], t[13], 1], [t[14], t[15], 1], [t[16], t[17], 1],
        [1, 1, 0], [1, t[3], 0], [0, 0, 1],
        [t[6], t[13], 1], [t[8], t[15], 1], [t[10], t[17], 1],
    ]
    return PreEmbedding(ring, _vectors(ring, rows))


Z3_BLOCKS: Tuple[Tuple[int, int, int], ...] = (
    (0, 3, 6), (0, 4, 7), (0, 5, 8),
    (1, 3, 7), (1, 4, 8), (1, 5, 6),
    (2, 3, 8), (2, 4, 6), (2, 5, 7),
)


def z3_example_preembedding() -> Tuple[IncidenceStructure, PreEmbedding]:
    """Dual 3-net of the cyclic group of order 3 over ``QQ[t1..t13]``."""
    ring = polynomial_ring(13)
    t = (None, *ring.gens)
    rows = [
        [1, 0, 0], [t[1], t[2], t[13]], [t[3], t[4], t[13]],
        [0, 1, 0], [t[5], t[6], t[13]], [t[7], t[8], t[13]],
        [1, 1, 0], [t[9], t[10], t[13]], [t[11], t[12], t[13]],
    ]
    return IncidenceStructure(9, Z3_BLOCKS), PreEmbedding(ring, _vectors(ring, rows))


def collinearity_ideal(s: Union[IncidenceStructure, Multinet], xi: PreEmbedding) -> Ideal:
    """Determinants of every collinear triple; identically zero ones dropped."""
    structure = s.structure if isinstance(s, Multinet) else s
    if structure.num_points != len(xi):
        raise ValueError(
            f"Pre-embedding has {len(xi)} points, structure has {structure.num_points}"
        )
    generators = []
    for a, b, c in structure.collinear_triples():
        d = determinant(xi.points[a], xi.points[b], xi.points[c])
        if d:
            generators.append(d)
    logger.debug(f"collinearity ideal with {len(generators)} generators")
    return Ideal(generators, xi.ring)
