# src/embedding/report.py
"""Per-class analysis: components, admissibility, dimensions, merged blocks."""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.embedding.admissibility import is_admissible
from src.embedding.golden import (
    COMPONENT_COUNTS,
    MERGED_SUMMARIES,
    OUT_OF_SCOPE,
    ComponentCounts,
    MergedSummary,
)
from src.embedding.merged import MergedBlock, merged_block_summary, merged_blocks
from src.embedding.preembedding import PreEmbedding, collinearity_ideal, standard_preembedding
from src.embedding.primes import minimal_primes
from src.exceptions import ScopeError
from src.incidence.classification import CLASS_IDS, class_representative
from src.incidence.structure import Multinet
from src.polyring.groebner import Budget
from src.polyring.ideal import Ideal, krull_dimension
from src.polyring.ring import format_polynomial

logger = logging.getLogger(__name__)


@dataclass
class Component:
    ideal: Ideal
    admissible: bool
    dimension: Optional[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generators": [format_polynomial(g) for g in self.ideal.groebner_basis()],
            "admissible": self.admissible,
            "dim": self.dimension,
        }


@dataclass
class ComponentReport:
    class_id: str
    components: List[Component]
    merged: Optional[List[MergedBlock]] = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def admissible_index(self) -> Optional[int]:
        for i, c in enumerate(self.components):
            if c.admissible:
                return i
        return None

    @property
    def admissible_component(self) -> Optional[Component]:
        index = self.admissible_index
        return None if index is None else self.components[index]

    def counts(self) -> ComponentCounts:
        admissible = [c for c in self.components if c.admissible]
        dimension = admissible[0].dimension if admissible else None
        return ComponentCounts(len(self.components), len(admissible), dimension)

    def merged_summary(self) -> Optional[MergedSummary]:
        return None if self.merged is None else merged_block_summary(self.merged)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.class_id,
            "components": [c.to_dict() for c in self.components],
            "merged_blocks": [b.to_dict() for b in self.merged or []],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


@dataclass(frozen=True)
class Verdict:
    class_id: str
    embeds: bool
    report: ComponentReport


def check_scope(class_id: str) -> None:
    if class_id not in CLASS_IDS:
        raise ScopeError(f"Unknown class {class_id!r}; expected one of M1..M16")
    if class_id in OUT_OF_SCOPE:
        raise ScopeError(
            f"{class_id} has a superline of length 3; its embeddings are settled "
            "geometrically and are outside the computational pipeline"
        )


def analyze_multinet(
    class_id: str,
    m: Multinet,
    budget: Optional[Budget] = None,
    with_merged: bool = False,
) -> ComponentReport:
    budget = budget or Budget.from_settings()
    xi = standard_preembedding(m)
    ideal = collinearity_ideal(m, xi)
    logger.info(f"{class_id}: collinearity ideal with {len(ideal.generators)} generators")
    components = []
    for p in minimal_primes(ideal, budget):
        admissible = is_admissible(p, xi, budget)
        components.append(
            Component(p, admissible, krull_dimension(p, budget) if admissible else None)
        )
    report = ComponentReport(class_id, components)
    if with_merged:
        report.merged = merged_for(m, xi, report, budget)
    report.elapsed = budget.elapsed()
    logger.info(
        f"{class_id}: {len(components)} components, "
        f"{report.counts().admissible} admissible in {report.elapsed:.1f}s"
    )
    return report


def merged_for(
    m: Multinet, xi: PreEmbedding, report: ComponentReport, budget: Optional[Budget] = None
) -> List[MergedBlock]:
    component = report.admissible_component
    if component is None:
        raise ScopeError(
            f"{report.class_id} has no admissible component and no weak projective "
            "embedding, so it has no merged blocks"
        )
    return merged_blocks(m, xi, component.ideal, budget)


def analyze(
    class_id: str,
    budget: Optional[Budget] = None,
    with_merged: bool = False,
    jobs: int = 1,
) -> ComponentReport:
    """Analyze the well-indexed representative of ``class_id`` (M3..M16)."""
    check_scope(class_id)
    record = class_representative(class_id, jobs=jobs)
    return analyze_multinet(class_id, record.representative, budget, with_merged)


def embedding_verdict(report: ComponentReport) -> Verdict:
    return Verdict(report.class_id, report.admissible_index is not None, report)


def verify_report(report: ComponentReport) -> Tuple[List[str], List[str]]:
    """Differences from the published tables, split into errors and warnings."""
    errors: List[str] = []
    warnings: List[str] = []
    expected = COMPONENT_COUNTS.get(report.class_id)
    if expected is not None and report.counts() != expected:
        errors.append(f"{report.class_id}: expected {expected}, computed {report.counts()}")
    if sum(c.admissible for c in report.components) > 1:
        errors.append(f"{report.class_id}: more than one admissible component")
    summary = report.merged_summary()
    published = MERGED_SUMMARIES.get(report.class_id)
    if summary is not None and published is not None and summary != published:
        message = f"{report.class_id}: merged blocks {summary.to_dict()} vs {published.to_dict()}"
        (warnings if published.ambiguous else errors).append(message)
    for message in warnings:
        logger.warning(message)
    return errors, warnings
