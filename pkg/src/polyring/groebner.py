# src/polyring/groebner.py
"""Reduced Groebner bases by Buchberger's algorithm.

Pairs are filtered with the Gebauer-Moeller installation of the coprime and
chain criteria and selected by total degree of their lcm, then by the ring
order. Every reduction is charged to a ``Budget``.
"""
import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from src.config.settings import settings
from src.exceptions import BudgetExceeded
from src.monitoring.metrics import GROEBNER_REDUCTIONS, GROEBNER_SECONDS
from src.polyring.orders import MonomialOrder
from src.polyring.ring import Polynomial, to_ring, with_order

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Budget:
    """Wall-clock and reduction allowance shared by a family of computations."""

    def __init__(
        self, seconds: Optional[float] = None, max_reductions: Optional[int] = None
    ):
        if seconds is not None and seconds <= 0:
            raise ValueError("Budget seconds must be positive")
        self.seconds = seconds
        self.max_reductions = max_reductions
        self.started = time.monotonic()
        self.reductions = 0

    @classmethod
    def from_settings(cls) -> "Budget":
        return cls(settings.groebner.budget_seconds, settings.groebner.max_reductions)

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls()

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def exhausted(self) -> bool:
        if self.seconds is not None and self.elapsed() > self.seconds:
            return True
        return self.max_reductions is not None and self.reductions >= self.max_reductions

    def charge(self, partial: Sequence[Polynomial] = (), pending: int = 0) -> None:
        self.reductions += 1
        if self.exhausted():
            raise BudgetExceeded(
                f"Groebner budget exhausted after {self.reductions} reductions "
                f"and {self.elapsed():.1f}s",
                partial=list(partial),
                pending=pending,
            )


def _target_ring(
    polys: Sequence[Polynomial], order: Optional[MonomialOrder]
) -> PolyRing:
    ring = polys[0].ring
    return ring if order is None else with_order(ring, order)


def normal_form(
    f: Polynomial, g: Sequence[Polynomial], order: Optional[MonomialOrder] = None
) -> Polynomial:
    """Remainder of ``f`` on division by ``g`` in the given order."""
    divisors = [p for p in g if p]
    if not divisors or not f:
        return f
    ring = _target_ring([f], order)
    r = f.set_ring(ring).rem(to_ring(divisors, ring))
    return r.set_ring(f.ring)


def divide(
    f: Polynomial, g: Sequence[Polynomial], order: Optional[MonomialOrder] = None
) -> Tuple[List[Polynomial], Polynomial]:
    """Quotients ``q`` and remainder ``r`` with ``f = Σ q_i g_i + r``."""
    ring = _target_ring([f], order)
    nonzero = [i for i, p in enumerate(g) if p]
    quotients = [f.ring.zero for _ in g]
    if not nonzero:
        return quotients, f
    qs, r = f.set_ring(ring).div(to_ring([g[i] for i in nonzero], ring))
    for i, q in zip(nonzero, qs):
        quotients[i] = q.set_ring(f.ring)
    return quotients, r.set_ring(f.ring)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    domain = ring.domain
    left = f.mul_term((ring.monomial_div(lcm, f.LM), domain.quo(domain.one, f.LC)))
    right = g.mul_term((ring.monomial_div(lcm, g.LM), domain.quo(domain.one, g.LC)))
    return left - right


class _PairQueue:
    """Critical pairs keyed by (degree of lcm, order of lcm, indices)."""

    def __init__(self, ring: PolyRing, polys: List[Polynomial]):
        self.ring = ring
        self.polys = polys
        self.keys: Dict[Pair, tuple] = {}

    def __len__(self) -> int:
        return len(self.keys)

    def pairs(self) -> List[Pair]:
        return list(self.keys)

    def add(self, pair: Pair) -> None:
        lcm = self.ring.monomial_lcm(self.polys[pair[0]].LM, self.polys[pair[1]].LM)
        self.keys[pair] = (sum(lcm), self.ring.order(lcm), pair)

    def replace(self, pairs: List[Pair]) -> None:
        kept = {p: self.keys[p] for p in pairs if p in self.keys}
        self.keys = kept

    def pop(self) -> Pair:
        pair = min(self.keys, key=self.keys.__getitem__)
        del self.keys[pair]
        return pair


def _update(
    polys: List[Polynomial], basis: List[int], queue: _PairQueue, ih: int
) -> List[int]:
    """Gebauer-Moeller update after adjoining ``polys[ih]``."""
    ring = queue.ring
    lcm, mul, div = ring.monomial_lcm, ring.monomial_mul, ring.monomial_div
    mh = polys[ih].LM

    candidates = list(basis)
    chosen: List[int] = []
    while candidates:
        ig = candidates.pop(0)
        mg = polys[ig].LM
        lcm_hg = lcm(mh, mg)

        def divides(ip: int, lcm_hg: Tuple[int, ...] = lcm_hg) -> bool:
            return div(lcm_hg, lcm(mh, polys[ip].LM)) is not None

        coprime = mul(mh, mg) == lcm_hg
        if coprime or (
            not any(divides(ip) for ip in candidates)
            and not any(divides(ip) for ip in chosen)
        ):
            chosen.append(ig)
    new_pairs = [
        (ig, ih) for ig in chosen if mul(mh, polys[ig].LM) != lcm(mh, polys[ig].LM)
    ]

    kept = []
    for ig1, ig2 in queue.pairs():
        m1, m2 = polys[ig1].LM, polys[ig2].LM
        lcm12 = lcm(m1, m2)
        if div(lcm12, mh) is None or lcm(m1, mh) == lcm12 or lcm(m2, mh) == lcm12:
            kept.append((ig1, ig2))
    queue.replace(kept)
    for pair in new_pairs:
        queue.add(pair)

    remaining = [ig for ig in basis if div(polys[ig].LM, mh) is None]
    remaining.append(ih)
    return remaining


def _reduce_basis(ring: PolyRing, basis: List[Polynomial]) -> List[Polynomial]:
    by_lm = sorted(basis, key=lambda p: ring.order(p.LM))
    minimal: List[Polynomial] = []
    for p in by_lm:
        if not any(ring.monomial_div(p.LM, q.LM) is not None for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = p.rem(others) if others else p
        reduced.append(r.monic())
    return sorted(reduced, key=lambda p: ring.order(p.LM), reverse=True)


def buchberger(
    gens: Sequence[Polynomial],
    order: Optional[MonomialOrder] = None,
    budget: Optional[Budget] = None,
    basis: Optional[Sequence[Polynomial]] = None,
) -> List[Polynomial]:
    """Reduced Groebner basis of ``⟨gens⟩`` (plus ``basis``) in ``order``.

    ``basis``, when given, must already be a reduced basis in ``order``; only
    pairs involving the new generators are then formed. Elements are monic and
    sorted by decreasing leading monomial. The zero ideal gives ``[]``.
    """
    seed = [p for p in (basis or ()) if p]
    new = [p for p in gens if p]
    if not seed and not new:
        return []
    ring = _target_ring(seed + new, order)
    budget = budget or Budget.from_settings()
    started = time.monotonic()

    polys: List[Polynomial] = []
    current: List[int] = []
    queue = _PairQueue(ring, polys)
    for p in to_ring(seed, ring):
        polys.append(p.monic())
        current.append(len(polys) - 1)

    for p in sorted(to_ring(new, ring), key=lambda p: ring.order(p.LM)):
        h = p.rem([polys[i] for i in current]) if current else p
        if not h:
            continue
        if h.is_ground:
            return [ring.one]
        polys.append(h.monic())
        current = _update(polys, current, queue, len(polys) - 1)

    while len(queue):
        i, j = queue.pop()
        budget.charge([polys[k] for k in current], len(queue))
        GROEBNER_REDUCTIONS.inc()
        h = s_polynomial(polys[i], polys[j]).rem([polys[k] for k in current])
        if not h:
            continue
        if h.is_ground:
            GROEBNER_SECONDS.observe(time.monotonic() - started)
            return [ring.one]
        polys.append(h.monic())
        current = _update(polys, current, queue, len(polys) - 1)
        if budget.reductions % 500 == 0:
            logger.debug(
                f"buchberger: {len(current)} basis elements, {len(queue)} pairs pending"
            )

    result = _reduce_basis(ring, [polys[k] for k in current])
    GROEBNER_SECONDS.observe(time.monotonic() - started)
    logger.debug(f"buchberger: reduced basis of {len(result)} elements")
    return result


def is_groebner_basis(basis: Sequence[Polynomial]) -> bool:
    """Every S-polynomial of ``basis`` reduces to zero in the ring order."""
    basis = [p for p in basis if p]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if s_polynomial(basis[i], basis[j]).rem(basis):
                return False
    return True
