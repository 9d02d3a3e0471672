# src/polyring/ideal.py
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from src.config.settings import settings
from src.polyring.groebner import Budget, buchberger, normal_form
from src.polyring.orders import DEGREVLEX, MonomialOrder
from src.polyring.ring import Polynomial, format_polynomial, to_ring, with_order

logger = logging.getLogger(__name__)

SATURATION_VARIABLE = Symbol("w_sat")


def default_order() -> MonomialOrder:
    return MonomialOrder.parse(settings.groebner.order)


class Ideal:
    """A finitely generated ideal with reduced Groebner bases cached per order."""

    def __init__(self, generators: Iterable[Polynomial], ring: Optional[PolyRing] = None):
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        if ring is None:
            if not self.generators:
                raise ValueError("An ideal without generators needs an explicit ring")
            ring = self.generators[0].ring
        self.ring = ring
        self.generators = tuple(to_ring(self.generators, ring))
        self._bases: Dict[str, Tuple[Polynomial, ...]] = {}

    @classmethod
    def from_basis(
        cls,
        basis: Sequence[Polynomial],
        ring: PolyRing,
        order: MonomialOrder = DEGREVLEX,
    ) -> "Ideal":
        """Wrap a reduced basis that is already known to be one in ``order``."""
        ideal = cls(basis, ring)
        ideal._bases[str(order)] = tuple(to_ring(basis, with_order(ring, order)))
        return ideal

    def groebner_basis(
        self, order: Optional[MonomialOrder] = None, budget: Optional[Budget] = None
    ) -> Tuple[Polynomial, ...]:
        order = order or default_order()
        key = str(order)
        if key not in self._bases:
            gens = [g for g in self.generators if g]
            if gens:
                basis = buchberger(gens, order, budget)
            else:
                basis = []
            self._bases[key] = tuple(basis)
            logger.debug(f"basis in {key}: {len(basis)} elements")
        return self._bases[key]

    def is_unit(self, budget: Optional[Budget] = None) -> bool:
        basis = self.groebner_basis(budget=budget)
        return len(basis) == 1 and basis[0].is_ground

    def is_zero(self) -> bool:
        return not any(self.generators)

    def reduce(self, f: Polynomial, budget: Optional[Budget] = None) -> Polynomial:
        order = default_order()
        return normal_form(f.set_ring(self.ring), self.groebner_basis(order, budget), order)

    def __contains__(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + tuple(to_ring(other.generators, self.ring)), self.ring)

    def extended(
        self, polys: Sequence[Polynomial], budget: Optional[Budget] = None
    ) -> "Ideal":
        """``self + ⟨polys⟩``, reusing the cached basis as a starting point."""
        order = default_order()
        basis = self.groebner_basis(order, budget)
        target = with_order(self.ring, order)
        new_basis = buchberger(to_ring(polys, target), order, budget, basis=basis)
        return Ideal.from_basis(new_basis, self.ring, order)

    def canonical_text(self) -> str:
        return "\n".join(format_polynomial(g) for g in self.groebner_basis(DEGREVLEX))

    def basis_key(self) -> Tuple[Tuple[Tuple[Tuple[int, ...], object], ...], ...]:
        basis = self.groebner_basis(DEGREVLEX)
        return tuple(tuple(sorted(g.items())) for g in basis)

    def __repr__(self) -> str:
        gens = ", ".join(format_polynomial(g) for g in self.generators[:4])
        more = ", …" if len(self.generators) > 4 else ""
        return f"Ideal<{gens}{more}>"


def ideal_membership(f: Polynomial, i: Ideal, budget: Optional[Budget] = None) -> bool:
    if not f:
        return True
    return not i.reduce(f, budget)


def ideal_contains(i: Ideal, j: Ideal, budget: Optional[Budget] = None) -> bool:
    """``j ⊆ i``."""
    return all(ideal_membership(g, i, budget) for g in j.generators)


def ideal_equal(i: Ideal, j: Ideal, budget: Optional[Budget] = None) -> bool:
    return ideal_contains(i, j, budget) and ideal_contains(j, i, budget)


def saturate(i: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """``i : f^∞`` by eliminating ``w`` from ``i + ⟨1 - w·f⟩``."""
    if not f:
        raise ValueError("Cannot saturate by the zero polynomial")
    f = f.set_ring(i.ring)
    if f.is_ground:
        return i
    base = i.ring
    extended = PolyRing(
        (SATURATION_VARIABLE, *base.symbols),
        QQ,
        MonomialOrder("elimination", 1).to_sympy(base.ngens + 1),
    )
    w = extended.gens[0]
    gens = to_ring(i.groebner_basis(budget=budget), extended)
    gens.append(extended.one - w * f.set_ring(extended))
    basis = buchberger(gens, budget=budget)
    kept = [g for g in basis if g.LM[0] == 0]
    target = with_order(base, DEGREVLEX)
    result = Ideal.from_basis(to_ring(kept, target), base, DEGREVLEX)
    logger.debug(f"saturation: {len(i.generators)} -> {len(kept)} generators")
    return result


def eliminate(i: Ideal, k: int, budget: Optional[Budget] = None) -> Ideal:
    """Intersection of ``i`` with the ring of the last ``n - k`` variables."""
    n = i.ring.ngens
    if not 0 < k < n:
        raise ValueError(f"Can eliminate between 1 and {n - 1} variables, got {k}")
    basis = i.groebner_basis(MonomialOrder("elimination", k), budget)
    kept = [g for g in basis if not any(g.LM[:k])]
    smaller = PolyRing(i.ring.symbols[k:], QQ, DEGREVLEX.to_sympy(n - k))
    return Ideal.from_basis(to_ring(kept, smaller), smaller, DEGREVLEX)


def _min_hitting_set(supports: List[Set[int]]) -> int:
    best = [len(set().union(*supports))] if supports else [0]

    def search(chosen: Set[int], remaining: List[Set[int]]) -> None:
        if len(chosen) >= best[0]:
            return
        unhit = [s for s in remaining if not s & chosen]
        if not unhit:
            best[0] = len(chosen)
            return
        pivot = min(unhit, key=len)
        for v in sorted(pivot):
            search(chosen | {v}, unhit)

    search(set(), supports)
    return best[0]


def krull_dimension(i: Ideal, budget: Optional[Budget] = None) -> int:
    """Size of a largest variable set containing no leading-monomial support."""
    basis = i.groebner_basis(budget=budget)
    if any(g.is_ground for g in basis):
        raise ValueError("The unit ideal has no Krull dimension")
    supports = [{v for v, e in enumerate(g.LM) if e} for g in basis]
    return i.ring.ngens - _min_hitting_set(supports)
