# src/embedding/merged.py
"""Merged blocks: maximal non-block point sets collinear modulo a prime."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Union

from src.embedding.golden import MergedSummary
from src.embedding.preembedding import PreEmbedding, determinant
from src.exceptions import InvariantViolation
from src.incidence.structure import IncidenceStructure, Multinet, traces
from src.polyring.groebner import Budget
from src.polyring.ideal import Ideal

logger = logging.getLogger(__name__)

LONG_LINE = "long_line"


@dataclass(frozen=True)
class MergedBlock:
    points: tuple
    kind: str
    length: int

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def part(self) -> Optional[int]:
        """Zero-based part index for blocks inside one part."""
        if self.kind == LONG_LINE:
            return None
        return int(self.kind[len("part"):]) - 1

    def to_dict(self) -> Dict[str, object]:
        return {"points": list(self.points), "kind": self.kind, "size": self.size}


def collinear_sets(xi: PreEmbedding, p: Ideal, budget: Optional[Budget] = None) -> List[Set[int]]:
    """Point triples whose determinant lies in ``p``, in lexicographic order."""
    sets = []
    for triple in combinations(range(len(xi)), 3):
        d = determinant(*(xi.points[i] for i in triple))
        if not p.reduce(d, budget):
            sets.append(set(triple))
    return sets


def merge_sets(sets: List[Set[int]]) -> List[tuple]:
    """Absorb into each set every later set sharing at least two points.

    A set keeps absorbing until no later set meets it in two points, then the
    scan moves on; absorbed sets are removed.
    """
    merged = [set(s) for s in sets]
    current = 0
    while current < len(merged):
        overlapping = [
            i for i in range(current + 1, len(merged))
            if len(merged[current] & merged[i]) > 1
        ]
        if not overlapping:
            current += 1
            continue
        for i in reversed(overlapping):
            merged[current] |= merged.pop(i)
    return [tuple(sorted(s)) for s in merged]


def classify_merged_set(n: int, points: tuple) -> MergedBlock:
    nonempty = [k for k, t in enumerate(traces(n, points)) if t]
    if len(nonempty) == 1:
        return MergedBlock(points, f"part{nonempty[0] + 1}", len(points))
    sizes = {len(t) for t in traces(n, points)}
    if len(sizes) != 1 or min(sizes) < 2:
        raise InvariantViolation(
            f"Merged set {points} has traces of sizes "
            f"{[len(t) for t in traces(n, points)]}"
        )
    return MergedBlock(points, LONG_LINE, sizes.pop())


def merged_blocks(
    s: Union[IncidenceStructure, Multinet],
    xi: PreEmbedding,
    p: Ideal,
    budget: Optional[Budget] = None,
) -> List[MergedBlock]:
    """Merged blocks of ``p``; ``s`` has ``3n`` points split into three parts."""
    structure = s.structure if isinstance(s, Multinet) else s
    if structure.num_points % 3:
        raise ValueError("Merged blocks need a point set split into three parts")
    n = structure.num_points // 3
    blocks = set(structure.blocks)
    result = [
        classify_merged_set(n, points)
        for points in merge_sets(collinear_sets(xi, p, budget))
        if points not in blocks
    ]
    logger.debug(f"{len(result)} merged blocks")
    return result


def merged_block_summary(blocks: List[MergedBlock]) -> MergedSummary:
    parts: List[List[int]] = [[], [], []]
    long_lines = 0
    for b in blocks:
        if b.part is None:
            long_lines += 1
        else:
            parts[b.part].append(b.size)
    return MergedSummary(
        long_lines,
        (tuple(sorted(parts[0])), tuple(sorted(parts[1])), tuple(sorted(parts[2]))),
    )
