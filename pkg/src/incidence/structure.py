# src/incidence/structure.py
"""Incidence structures, dual 3-nets and light dual multinets.

Points of a multinet of order ``n`` are ``0..3n-1``; part ``k`` holds
``k*n..(k+1)*n-1`` and point ``k*n + x`` carries the label ``x``.
"""
import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.exceptions import IncidenceError, InvariantViolation, SubsquareError
from src.quasigroup.catalog import short_name
from src.quasigroup.latin_square import LatinSquare, isotope
from src.quasigroup.subsquares import SubsquareTriple, is_subsquare

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class IncidenceStructure:
    """A simple point-block structure; every block has at least 3 points."""

    num_points: int
    blocks: Tuple[Block, ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted(tuple(sorted(set(b))) for b in self.blocks))
        for b in normalized:
            if len(b) < 3:
                raise IncidenceError(f"Block {b} has fewer than 3 points")
            if b[0] < 0 or b[-1] >= self.num_points:
                raise IncidenceError(f"Block {b} outside 0..{self.num_points - 1}")
        if len(set(normalized)) != len(normalized):
            raise IncidenceError("Incidence structure is not simple: repeated block")
        object.__setattr__(self, "blocks", normalized)

    def blocks_through(self, point: int) -> List[Block]:
        return [b for b in self.blocks if point in b]

    def degree(self, point: int) -> int:
        return sum(1 for b in self.blocks if point in b)

    def collinear_triples(self) -> List[Tuple[int, int, int]]:
        return [t for b in self.blocks for t in combinations(b, 3)]

    def collinearity_matrix(self) -> np.ndarray:
        a = np.zeros((self.num_points, self.num_points), dtype=np.int64)
        for b in self.blocks:
            idx = np.array(b)
            a[np.ix_(idx, idx)] = 1
        np.fill_diagonal(a, 0)
        return a

    def relabel(self, mapping: Sequence[int]) -> "IncidenceStructure":
        """Image under the point permutation ``p -> mapping[p]``."""
        return IncidenceStructure(
            self.num_points, tuple(tuple(mapping[p] for p in b) for b in self.blocks)
        )


@dataclass(frozen=True)
class Labeling:
    """Source quasigroup of a multinet and the subsquare forming its superline."""

    quasigroup: LatinSquare
    subsquare: Optional[SubsquareTriple] = None


@dataclass(frozen=True)
class Multinet:
    n: int
    structure: IncidenceStructure
    labeling: Optional[Labeling] = None
    name: Optional[str] = None
    quasigroups: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.structure.num_points != 3 * self.n:
            raise IncidenceError(
                f"A multinet of order {self.n} needs {3 * self.n} points, "
                f"got {self.structure.num_points}"
            )
        if len(self.structure.blocks) <= 1:
            raise IncidenceError("A multinet needs more than one block")

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return self.structure.blocks

    @property
    def num_points(self) -> int:
        return self.structure.num_points

    def part_of(self, point: int) -> int:
        return point // self.n

    def parts(self) -> Tuple[range, range, range]:
        n = self.n
        return range(0, n), range(n, 2 * n), range(2 * n, 3 * n)


def traces(n: int, points: Iterable[int]) -> Tuple[Tuple[int, ...], ...]:
    """Labels of ``points`` in each of the three parts."""
    result: List[List[int]] = [[], [], []]
    for p in sorted(points):
        result[p // n].append(p % n)
    return tuple(tuple(t) for t in result)


def dual_3net(q: LatinSquare) -> Multinet:
    n = q.order
    blocks = tuple(
        (x, n + y, 2 * n + q.multiply(x, y)) for x in range(n) for y in range(n)
    )
    return Multinet(
        n=n,
        structure=IncidenceStructure(3 * n, blocks),
        labeling=Labeling(q),
        name=q.name,
        quasigroups=(_label(q),),
    )


def _label(q: LatinSquare) -> str:
    if q.name is None:
        return ""
    try:
        return short_name(q.name)
    except ValueError:
        return q.name


def multinet_with_superline(q: LatinSquare, s: SubsquareTriple) -> Multinet:
    """Replace the ``r²`` lines inside the subsquare ``s`` by one superline."""
    n = q.order
    if not is_subsquare(q, s):
        raise SubsquareError(f"{s} is not a subsquare of {q!r}")
    if not 2 <= s.order < n:
        raise SubsquareError(f"Superline subsquare must be proper of order >= 2, got {s.order}")
    s1, s2 = set(s.s1), set(s.s2)
    short = [
        (x, n + y, 2 * n + q.multiply(x, y))
        for x in range(n)
        for y in range(n)
        if not (x in s1 and y in s2)
    ]
    superline = s.points(n)
    m = Multinet(
        n=n,
        structure=IncidenceStructure(3 * n, (*short, superline)),
        labeling=Labeling(q, s),
        name=q.name,
        quasigroups=(_label(q),),
    )
    logger.debug(f"{q.name}: superline {superline} with {len(short)} short blocks")
    return m


def line_length(m: Multinet, block: Sequence[int]) -> int:
    key = tuple(sorted(block))
    if key not in set(m.blocks):
        raise IncidenceError(f"{key} is not a block of the multinet")
    sizes = {len(t) for t in traces(m.n, key)}
    if len(sizes) != 1:
        raise InvariantViolation(f"Block {key} has traces of unequal sizes {sizes}")
    return sizes.pop()


def superlines(m: Multinet) -> List[Block]:
    return [b for b in m.blocks if len(b) > 3]


def check_multinet(m: Multinet) -> None:
    """Raise ``InvariantViolation`` unless ``m`` is a light dual multinet."""
    for a, b in combinations(m.blocks, 2):
        if len(set(a) & set(b)) > 1:
            raise InvariantViolation(f"Blocks {a} and {b} share two points")
    for block in m.blocks:
        line_length(m, block)
    if m.labeling is not None:
        q, n = m.labeling.quasigroup, m.n
        through = {}
        for block in m.blocks:
            for p in block:
                through.setdefault(p, set()).add(block)
        for x in range(n):
            for y in range(n):
                common = through[x] & through[n + y] & through[2 * n + q.multiply(x, y)]
                if not common:
                    raise InvariantViolation(
                        f"No block contains the labels ({x}, {y}, {q.multiply(x, y)})"
                    )


def well_index(m: Multinet) -> Multinet:
    """Relabel ``m`` so that its longest block is the initial superline.

    The longest block takes labels ``0..r-1`` in each part, the other points of
    the second part keep their relative order, and for ``j >= r`` the triples
    ``{0, n+j, 2n+j}`` and ``{j, n, 2n+j}`` become blocks.
    """
    n = m.n
    longest = max(len(b) for b in m.blocks)
    if longest <= 3:
        raise IncidenceError("well_index needs a block of length at least 2")
    sl = [b for b in m.blocks if len(b) == longest][-1]
    r = longest // 3
    a = [0] * (3 * n)
    a[0:r] = sl[0:r]
    a[n : n + r] = sl[r : 2 * r]
    a[2 * n : 2 * n + r] = sl[2 * r : 3 * r]
    a[n + r : 2 * n] = [x for x in range(n, 2 * n) if x not in sl]

    def third(first: int, second: int, position: int) -> int:
        for b in m.blocks:
            if len(b) == 3 and first in b and second in b:
                return b[position]
        raise InvariantViolation(f"No short block through {first} and {second}")

    for j in range(r, n):
        a[2 * n + j] = third(a[0], a[n + j], 2)
    for j in range(r, n):
        a[j] = third(a[n], a[2 * n + j], 0)
    if sorted(a) != list(range(3 * n)):
        raise InvariantViolation("Well-indexing did not produce a permutation")
    new_label = [0] * (3 * n)
    for new, old in enumerate(a):
        new_label[old] = new
    structure = m.structure.relabel(new_label)
    labeling = None
    if m.labeling is not None:
        gammas = [[new_label[k * n + x] - k * n for x in range(n)] for k in range(3)]
        q = isotope(m.labeling.quasigroup, *gammas)
        sub = m.labeling.subsquare
        if sub is not None:
            sub = SubsquareTriple(
                tuple(gammas[0][x] for x in sub.s1),
                tuple(gammas[1][y] for y in sub.s2),
                tuple(gammas[2][z] for z in sub.s3),
            )
        labeling = Labeling(q.renamed(m.labeling.quasigroup.name), sub)
    return Multinet(n, structure, labeling, m.name, m.quasigroups)


def is_well_indexed(m: Multinet) -> bool:
    n = m.n
    longest = max(len(b) for b in m.blocks)
    r = longest // 3
    expected = tuple(range(r)) + tuple(range(n, n + r)) + tuple(range(2 * n, 2 * n + r))
    blocks = set(m.blocks)
    if r < 2 or expected not in blocks:
        return False
    return all(
        (0, n + j, 2 * n + j) in blocks and (j, n, 2 * n + j) in blocks
        for j in range(r, n)
    )


def multinet_to_json(m: Multinet) -> Dict[str, Any]:
    return {
        "n": m.n,
        "blocks": [list(b) for b in m.blocks],
        "name": m.name or "",
        "quasigroups": list(m.quasigroups),
    }


def multinet_from_json(data: Dict[str, Any]) -> Multinet:
    n = int(data["n"])
    structure = IncidenceStructure(3 * n, tuple(tuple(b) for b in data["blocks"]))
    return Multinet(
        n=n,
        structure=structure,
        name=data.get("name") or None,
        quasigroups=tuple(data.get("quasigroups", ())),
    )


def dumps_multinet(m: Multinet) -> str:
    return json.dumps(multinet_to_json(m), sort_keys=True)
