# src/quasigroup/subsquares.py
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Set, Tuple

from src.exceptions import SubsquareError
from src.quasigroup.latin_square import LatinSquare

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsquareTriple:
    """``(S1, S2, S3)`` with ``S1·S2 ⊆ S3``, ``S1\\S3 ⊆ S2`` and ``S3/S2 ⊆ S1``."""

    s1: Tuple[int, ...]
    s2: Tuple[int, ...]
    s3: Tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("s1", "s2", "s3"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))
        if not len(self.s1) == len(self.s2) == len(self.s3):
            raise SubsquareError(
                f"Subsquare parts must have equal sizes, got "
                f"{len(self.s1)}, {len(self.s2)}, {len(self.s3)}"
            )

    @property
    def order(self) -> int:
        return len(self.s1)

    def points(self, n: int) -> Tuple[int, ...]:
        """The triple as dual-net points: ``S1``, then ``n + S2``, then ``2n + S3``."""
        return (
            self.s1
            + tuple(n + y for y in self.s2)
            + tuple(2 * n + z for z in self.s3)
        )


def is_subsquare(q: LatinSquare, triple: SubsquareTriple) -> bool:
    s1, s2, s3 = set(triple.s1), set(triple.s2), set(triple.s3)
    if not s1:
        return False
    return (
        all(q.multiply(x, y) in s3 for x in s1 for y in s2)
        and all(q.left_divide(x, z) in s2 for x in s1 for z in s3)
        and all(q.right_divide(z, y) in s1 for z in s3 for y in s2)
    )


def generated_subsquare(
    q: LatinSquare, u1: Iterable[int], u2: Iterable[int], u3: Iterable[int]
) -> SubsquareTriple:
    """Smallest subsquare whose parts contain ``u1``, ``u2`` and ``u3``.

    Products and both quotients are adjoined until nothing changes.
    ``({x}, {y}, ())`` gives the order-1 subsquare ``({x}, {y}, {xy})``. A seed
    confined to one part has no unique closure; element 0 is added to the
    second part (the first when the seed lies there) before closing. Empty
    seeds give the empty triple.
    """
    s1: Set[int] = set(u1)
    s2: Set[int] = set(u2)
    s3: Set[int] = set(u3)
    if sum(1 for s in (s1, s2, s3) if s) == 1:
        (s1 if s2 else s2).add(0)
    for e in s1 | s2 | s3:
        q._check(e)
    while True:
        size = len(s1) + len(s2) + len(s3)
        s3 |= {q.multiply(x, y) for x in s1 for y in s2}
        s2 |= {q.left_divide(x, z) for x in s1 for z in s3}
        s1 |= {q.right_divide(z, y) for z in s3 for y in s2}
        if len(s1) + len(s2) + len(s3) == size:
            break
    try:
        return SubsquareTriple(tuple(s1), tuple(s2), tuple(s3))
    except SubsquareError as e:
        raise SubsquareError(
            f"Generators do not determine a subsquare: {e}"
        ) from e


def subsquare_sort_key(triple: SubsquareTriple, n: int) -> Tuple[int, ...]:
    return triple.points(n)


def all_proper_subsquares(q: LatinSquare) -> List[SubsquareTriple]:
    """Proper subsquares of order at least 2, deduplicated and sorted.

    Every such subsquare is generated by a seed ``({x0, x1}, {y}, ∅)``; this is
    complete for order 6 and used as a heuristic for other orders.
    """
    n = q.order
    if n != 6:
        logger.warning(
            f"Seeded subsquare enumeration is only known to be complete for order 6 "
            f"(got order {n})"
        )
    found = {}
    for x0, x1 in combinations(range(n), 2):
        for y in range(n):
            triple = generated_subsquare(q, (x0, x1), (y,), ())
            if triple.order < n:
                found.setdefault(triple, None)
    result = sorted(found, key=lambda t: subsquare_sort_key(t, n))
    logger.debug(f"{q.name or 'table'}: {len(result)} proper subsquares")
    return result


def brute_force_subsquares(q: LatinSquare) -> List[SubsquareTriple]:
    """Exhaustive search over all closed triples of orders 2..n-1."""
    n = q.order
    result = []
    for r in range(2, n):
        for s1 in combinations(range(n), r):
            for s2 in combinations(range(n), r):
                s3 = {q.multiply(x, y) for x in s1 for y in s2}
                if len(s3) != r:
                    continue
                triple = SubsquareTriple(s1, s2, tuple(s3))
                if is_subsquare(q, triple):
                    result.append(triple)
    return sorted(result, key=lambda t: subsquare_sort_key(t, n))
