# src/embedding/primes.py
"""Candidate minimal primes by a factor-splitting tree.

Each node is an ideal together with polynomials required not to vanish. A
node is split on the first basis element with a nontrivial factorization;
nodes without such an element are saturated by their side conditions and
become leaves once saturation leaves them unchanged. Leaves are compared by
their zero sets and only the maximal ones are kept; no primality proof is
attempted.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.exceptions import BudgetExceeded, PartialResultError
from src.monitoring.metrics import SPLITTING_NODES
from src.polyring.factor import factor_sort_key, factor_with_multiplicities
from src.polyring.groebner import Budget
from src.polyring.ideal import Ideal, ideal_contains, ideal_membership, saturate
from src.polyring.ring import Polynomial

logger = logging.getLogger(__name__)


@dataclass
class _Node:
    base: Ideal
    extra: Tuple[Polynomial, ...] = ()
    nonzero: Tuple[Polynomial, ...] = ()
    depth: int = 0

    def ideal(self, budget: Budget) -> Ideal:
        if not self.extra:
            return self.base
        return self.base.extended(self.extra, budget)


@dataclass
class SplittingTree:
    budget: Budget
    leaves: List[Ideal] = field(default_factory=list)
    nodes: int = 0
    _factors: Dict[tuple, List[Tuple[Polynomial, int]]] = field(default_factory=dict)

    def factors(self, f: Polynomial) -> List[Tuple[Polynomial, int]]:
        key = tuple(sorted(f.items()))
        if key not in self._factors:
            self._factors[key] = factor_with_multiplicities(f)
        return self._factors[key]

    def run(self, ideal: Ideal) -> List[Ideal]:
        stack = [_Node(ideal)]
        while stack:
            node = stack.pop()
            try:
                children = self.expand(node)
            except BudgetExceeded as e:
                unfinished = [node.base] + [n.base for n in stack]
                raise PartialResultError(
                    f"Splitting stopped after {self.nodes} nodes: {e}",
                    finished=list(self.leaves),
                    unfinished=unfinished,
                ) from e
            stack.extend(reversed(children))
        return minimal_ideals(self.leaves, self.budget)

    def expand(self, node: _Node) -> List[_Node]:
        self.nodes += 1
        ideal = node.ideal(self.budget)
        basis = ideal.groebner_basis(budget=self.budget)
        if ideal.is_unit(self.budget):
            SPLITTING_NODES.labels(outcome="unit").inc()
            return []

        nonzero = []
        for f in node.nonzero:
            r = ideal.reduce(f, self.budget)
            if not r:
                SPLITTING_NODES.labels(outcome="pruned").inc()
                return []
            if not r.is_ground:
                nonzero.append(r)

        for leaf in self.leaves:
            if ideal_contains(ideal, leaf, self.budget):
                SPLITTING_NODES.labels(outcome="pruned").inc()
                return []

        for g in sorted(basis, key=factor_sort_key):
            factors = self.factors(g)
            if len(factors) == 1 and factors[0][1] == 1:
                continue
            distinct = [f for f, _ in factors]
            SPLITTING_NODES.labels(outcome="split").inc()
            logger.debug(
                f"depth {node.depth}: splitting on {len(distinct)} factors of degree "
                f"{[factor_sort_key(f)[0] for f in distinct]}"
            )
            if len(distinct) == 1:
                return [_Node(ideal, (distinct[0],), tuple(nonzero), node.depth)]
            return [
                _Node(ideal, (f,), tuple(nonzero) + tuple(distinct[:k]), node.depth + 1)
                for k, f in enumerate(distinct)
            ]

        if nonzero:
            saturated = ideal
            for f in nonzero:
                saturated = saturate(saturated, f, self.budget)
            if saturated.basis_key() != ideal.basis_key():
                SPLITTING_NODES.labels(outcome="saturated").inc()
                return [_Node(saturated, (), (), node.depth)]

        SPLITTING_NODES.labels(outcome="leaf").inc()
        self.leaves.append(ideal)
        return []


def vanishes_on(f: Polynomial, i: Ideal, budget: Optional[Budget] = None) -> bool:
    """``f`` lies in the radical of ``i``."""
    return ideal_membership(f, i, budget) or saturate(i, f, budget).is_unit(budget)


def covers(j: Ideal, i: Ideal, budget: Optional[Budget] = None) -> bool:
    """The zero set of ``i`` lies inside the zero set of ``j``."""
    return all(vanishes_on(g, i, budget) for g in j.groebner_basis(budget=budget))


def minimal_ideals(ideals: Sequence[Ideal], budget: Optional[Budget] = None) -> List[Ideal]:
    """Members of ``ideals`` whose zero sets are maximal, one per zero set, sorted.

    Comparison goes through radicals, so a leaf that is not radical cannot hide
    behind a smaller ideal with the same or a larger zero set. Among ideals with
    equal zero sets the largest is kept, then the first by canonical text.
    """
    unique: Dict[tuple, Ideal] = {}
    for i in ideals:
        if not i.is_unit(budget):
            unique.setdefault(i.basis_key(), i)
    candidates = sorted(unique.values(), key=lambda i: i.canonical_text())

    def preferred(j: Ideal, i: Ideal) -> bool:
        if not covers(i, j, budget):
            return True
        if ideal_contains(j, i, budget) != ideal_contains(i, j, budget):
            return ideal_contains(j, i, budget)
        return candidates.index(j) < candidates.index(i)

    kept = [
        i
        for i in candidates
        if not any(j is not i and covers(j, i, budget) and preferred(j, i) for j in candidates)
    ]
    dropped = len(candidates) - len(kept)
    if dropped:
        logger.debug(f"minimal ideals: dropped {dropped} of {len(candidates)} by radical comparison")
    return kept


def minimal_primes(ideal: Ideal, budget: Optional[Budget] = None) -> List[Ideal]:
    """Candidate minimal primes of ``ideal``; ``[]`` for the unit ideal.

    Raises ``PartialResultError`` carrying the finished leaves and the
    unexplored nodes when the budget runs out.
    """
    budget = budget or Budget.from_settings()
    tree = SplittingTree(budget)
    primes = tree.run(ideal)
    logger.info(
        f"splitting tree: {tree.nodes} nodes, {len(tree.leaves)} leaves, "
        f"{len(primes)} minimal"
    )
    return primes
