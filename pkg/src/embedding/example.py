# src/embedding/example.py
"""The nine-point dual 3-net of the cyclic group of order 3."""
import logging
from dataclasses import dataclass
from typing import List, Optional

from src.embedding.admissibility import is_admissible
from src.embedding.golden import Z3_ADMISSIBLE_PRIME, Z3_PRIME_AT_INFINITY
from src.embedding.preembedding import collinearity_ideal, z3_example_preembedding
from src.embedding.primes import minimal_primes
from src.embedding.report import Component
from src.polyring.groebner import Budget
from src.polyring.ideal import Ideal, ideal_equal, krull_dimension
from src.polyring.ring import parse_polynomial

logger = logging.getLogger(__name__)


@dataclass
class ExampleResult:
    components: List[Component]
    mismatches: List[str]

    @property
    def matches_published(self) -> bool:
        return not self.mismatches


def published_ideal(texts: tuple, ring) -> Ideal:
    return Ideal([parse_polynomial(t, ring) for t in texts], ring)


def analyze_z3_example(budget: Optional[Budget] = None) -> ExampleResult:
    budget = budget or Budget.from_settings()
    structure, xi = z3_example_preembedding()
    primes = minimal_primes(collinearity_ideal(structure, xi), budget)
    components = []
    for p in primes:
        admissible = is_admissible(p, xi, budget)
        components.append(
            Component(p, admissible, krull_dimension(p, budget) if admissible else None)
        )

    mismatches = []
    if len(components) != 2:
        mismatches.append(f"expected 2 components, computed {len(components)}")
    expected = [
        (published_ideal(Z3_PRIME_AT_INFINITY, xi.ring), False),
        (published_ideal(Z3_ADMISSIBLE_PRIME, xi.ring), True),
    ]
    for ideal, admissible in expected:
        found = [c for c in components if ideal_equal(c.ideal, ideal, budget)]
        if not found:
            mismatches.append(f"no computed component equals {ideal!r}")
        elif found[0].admissible != admissible:
            mismatches.append(f"{ideal!r} has admissibility {found[0].admissible}")
    for m in mismatches:
        logger.warning(m)
    return ExampleResult(components, mismatches)
