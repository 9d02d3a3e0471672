# src/incidence/isomorphism.py
"""Isomorphism and automorphism searches on incidence structures.

Points are mapped one at a time. Candidates come from refined point colours
and from the images of blocks that are already partly mapped; every new pair
must carry the same blocks as its image pair. Complete maps are confirmed on
the block sets before they are returned.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Hashable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.incidence.structure import IncidenceStructure
from src.monitoring.metrics import ISOMORPHISM_TESTS

logger = logging.getLogger(__name__)

Colours = Tuple[int, ...]

# Colour ids are shared by every structure in the process, so equal ids mean
# equal refinement histories.
_PALETTE: Dict[Hashable, int] = {}


def _colour(key: Hashable) -> int:
    return _PALETTE.setdefault(key, len(_PALETTE))


@dataclass(frozen=True)
class IsoCertificate:
    """``mapping[p]`` is the image in ``b`` of point ``p`` of ``a``."""

    mapping: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.mapping is not None

    def inverse(self) -> "IsoCertificate":
        if self.mapping is None:
            return self
        inv = [0] * len(self.mapping)
        for p, q in enumerate(self.mapping):
            inv[q] = p
        return IsoCertificate(tuple(inv))

    def then(self, other: "IsoCertificate") -> "IsoCertificate":
        """Composition: first ``self``, then ``other``."""
        if self.mapping is None or other.mapping is None:
            return IsoCertificate()
        return IsoCertificate(tuple(other.mapping[q] for q in self.mapping))


@dataclass(frozen=True)
class AutomorphismGroup:
    order: int
    generators: Tuple[Tuple[int, ...], ...]


def point_signatures(s: IncidenceStructure) -> List[Tuple[Tuple[int, ...], ...]]:
    """Per point: block sizes through it and its row of common-neighbour counts."""
    a = s.collinearity_matrix()
    common = a @ a
    sizes: Dict[int, List[int]] = {p: [] for p in range(s.num_points)}
    for b in s.blocks:
        for p in b:
            sizes[p].append(len(b))
    return [
        (
            tuple(sorted(sizes[p])),
            tuple(sorted(int(v) for v in common[p])),
            tuple(sorted(int(v) for v, adj in zip(common[p], a[p]) if adj)),
        )
        for p in range(s.num_points)
    ]


class _Lines:
    """Pair and neighbour tables of one structure."""

    def __init__(self, s: IncidenceStructure):
        self.structure = s
        self.pairs: Dict[Tuple[int, int], List[int]] = {}
        self.through: List[List[int]] = [[] for _ in range(s.num_points)]
        self.neighbours: List[Set[int]] = [set() for _ in range(s.num_points)]
        for i, b in enumerate(s.blocks):
            for p in b:
                self.through[p].append(i)
            for p, q in combinations(b, 2):
                self.pairs.setdefault((p, q), []).append(i)
                self.pairs.setdefault((q, p), []).append(i)
                self.neighbours[p].add(q)
                self.neighbours[q].add(p)
        self.linear = all(len(v) == 1 for v in self.pairs.values())

    def blocks_of(self, p: int, q: int) -> List[int]:
        return self.pairs.get((p, q), [])

    def pair_label(self, p: int, q: int) -> Tuple[int, ...]:
        return tuple(sorted(len(self.structure.blocks[i]) for i in self.blocks_of(p, q)))


def refine_colours(s: IncidenceStructure, individualised: Sequence[int] = ()) -> Colours:
    """Stable colouring from point signatures, with ``individualised[i]`` given its own colour.

    Each round a point's new colour is its old colour together with, for each
    block through it, the block size and the colours of the other points.
    """
    signatures = point_signatures(s)
    marked = {p: i for i, p in enumerate(individualised)}
    colours = [
        _colour(("base", marked[p]) if p in marked else ("signature", signatures[p]))
        for p in range(s.num_points)
    ]
    through = [s.blocks_through(p) for p in range(s.num_points)]
    distinct = len(set(colours))
    while True:
        refined = [
            _colour(
                (
                    colours[p],
                    tuple(
                        sorted(
                            (len(b), tuple(sorted(colours[q] for q in b if q != p)))
                            for b in through[p]
                        )
                    ),
                )
            )
            for p in range(s.num_points)
        ]
        count = len(set(refined))
        colours = refined
        if count == distinct:
            return tuple(colours)
        distinct = count


def incidence_graph(s: IncidenceStructure) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((("p", p) for p in range(s.num_points)), kind="point")
    for i, b in enumerate(s.blocks):
        graph.add_node(("b", i), kind="block")
        graph.add_edges_from((("b", i), ("p", p)) for p in b)
    return graph


@lru_cache(maxsize=4096)
def _invariant(s: IncidenceStructure) -> Tuple:
    return (
        s.num_points,
        tuple(sorted(len(b) for b in s.blocks)),
        tuple(sorted(refine_colours(s))),
        nx.weisfeiler_lehman_graph_hash(incidence_graph(s), node_attr="kind"),
    )


def _search_order(lines: _Lines, colours: Colours) -> List[int]:
    """Rarest colour first, then greedily the point with most ordered neighbours."""
    n = lines.structure.num_points
    frequency = {c: colours.count(c) for c in set(colours)}
    order: List[int] = []
    placed: Set[int] = set()
    while len(order) < n:
        best = min(
            (p for p in range(n) if p not in placed),
            key=lambda p: (
                -len(lines.neighbours[p] & placed),
                frequency[colours[p]],
                p,
            ),
        )
        order.append(best)
        placed.add(best)
    return order


def _search(
    a: IncidenceStructure,
    b: IncidenceStructure,
    colours_a: Colours,
    colours_b: Colours,
) -> Optional[Tuple[int, ...]]:
    """First point bijection ``a -> b`` preserving colours and blocks, if any."""
    ISOMORPHISM_TESTS.inc()
    la, lb = _Lines(a), _Lines(b)
    linear = la.linear and lb.linear
    order = _search_order(la, colours_a)
    mapping: Dict[int, int] = {}
    used: Set[int] = set()
    block_map: Dict[int, int] = {}
    block_inv: Dict[int, int] = {}
    by_colour: Dict[int, List[int]] = {}
    for q, c in enumerate(colours_b):
        by_colour.setdefault(c, []).append(q)

    def candidates(p: int) -> List[int]:
        anchors = [q for q in la.neighbours[p] if q in mapping]
        if not anchors:
            pool = by_colour.get(colours_a[p], [])
        else:
            q = anchors[0]
            pool = sorted(lb.neighbours[mapping[q]])
            if linear:
                (block,) = la.blocks_of(p, q)
                if block in block_map:
                    pool = list(b.blocks[block_map[block]])
        return [c for c in pool if c not in used and colours_b[c] == colours_a[p]]

    def assign(p: int, c: int) -> Optional[List[int]]:
        """Extend the block map for ``p -> c``; new block keys, or None on conflict."""
        added: List[int] = []
        for q, image in mapping.items():
            if la.pair_label(p, q) != lb.pair_label(c, image):
                break
            if not linear or not la.blocks_of(p, q):
                continue
            (block,) = la.blocks_of(p, q)
            (target,) = lb.blocks_of(c, image)
            if block_map.get(block, target) != target or block_inv.get(target, block) != block:
                break
            if block not in block_map:
                block_map[block] = target
                block_inv[target] = block
                added.append(block)
        else:
            return added
        undo(added)
        return None

    def undo(added: List[int]) -> None:
        for block in added:
            del block_inv[block_map.pop(block)]

    def extend(depth: int) -> Optional[Tuple[int, ...]]:
        if depth == len(order):
            image = tuple(mapping[p] for p in range(a.num_points))
            return image if is_isomorphism(a, b, image) else None
        p = order[depth]
        for c in candidates(p):
            added = assign(p, c)
            if added is None:
                continue
            mapping[p] = c
            used.add(c)
            found = extend(depth + 1)
            if found is not None:
                return found
            del mapping[p]
            used.discard(c)
            undo(added)
        return None

    return extend(0)


def is_isomorphic(a: IncidenceStructure, b: IncidenceStructure) -> IsoCertificate:
    if _invariant(a) != _invariant(b):
        return IsoCertificate()
    return IsoCertificate(_search(a, b, refine_colours(a), refine_colours(b)))


def is_isomorphism(
    a: IncidenceStructure, b: IncidenceStructure, mapping: Sequence[int]
) -> bool:
    if sorted(mapping) != list(range(a.num_points)) or a.num_points != b.num_points:
        return False
    return set(a.relabel(mapping).blocks) == set(b.blocks)


def _orbit(point: int, generators: List[Tuple[int, ...]]) -> List[int]:
    orbit = [point]
    seen = {point}
    for p in orbit:
        for g in generators:
            if g[p] not in seen:
                seen.add(g[p])
                orbit.append(g[p])
    return orbit


def automorphism_group(s: IncidenceStructure) -> AutomorphismGroup:
    """Group order by an orbit-stabiliser chain over individualised points.

    At each level the points fixed so far and the next base point get their
    own colours; the orbit of that point under the stabiliser of the earlier
    ones is built from search hits, and one transversal element per new orbit
    point joins the generating set. The chain stops once the colouring of the
    base is discrete.
    """
    base: List[int] = []
    order = 1
    generators: List[Tuple[int, ...]] = []
    for point in range(s.num_points):
        level_gens: List[Tuple[int, ...]] = []
        colours_a = refine_colours(s, [*base, point])
        profile = sorted(colours_a)
        for candidate in range(s.num_points):
            if candidate in base or candidate in _orbit(point, level_gens):
                continue
            colours_b = refine_colours(s, [*base, candidate])
            if sorted(colours_b) != profile:
                continue
            image = _search(s, s, colours_a, colours_b)
            if image is not None:
                level_gens.append(image)
        orbit_size = len(_orbit(point, level_gens))
        order *= orbit_size
        generators.extend(level_gens)
        base.append(point)
        if orbit_size > 1:
            logger.debug(f"base point {point}: orbit of size {orbit_size}")
        if len(set(colours_a)) == s.num_points:
            break
    logger.debug(f"automorphism group of order {order}, {len(generators)} generators")
    return AutomorphismGroup(order, tuple(generators))
