# src/pipelines/embedding_pipeline.py
"""Fan the per-class embedding analysis out over worker processes."""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from joblib import Parallel, delayed

from src.embedding.report import (
    ComponentReport,
    analyze_multinet,
    check_scope,
    embedding_verdict,
    verify_report,
)
from src.config.settings import settings
from src.exceptions import BudgetExceeded, PartialResultError
from src.incidence.classification import class_representative
from src.incidence.structure import Multinet
from src.monitoring.metrics import GROEBNER_REDUCTIONS
from src.polyring.groebner import Budget

logger = logging.getLogger(__name__)


@dataclass
class ClassOutcome:
    class_id: str
    report: Optional[ComponentReport] = None
    budget_message: Optional[str] = None
    finished: int = 0
    unfinished: int = 0
    reductions: int = 0
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return self.budget_message is not None

    @property
    def embeds(self) -> Optional[bool]:
        return None if self.report is None else embedding_verdict(self.report).embeds


def _run_one(
    class_id: str,
    m: Multinet,
    seconds: Optional[float],
    max_reductions: Optional[int],
    with_merged: bool,
    order: Optional[str] = None,
) -> ClassOutcome:
    # worker processes hold their own settings
    if order is not None:
        settings.groebner.order = order
    budget = Budget(seconds, max_reductions)
    try:
        report = analyze_multinet(class_id, m, budget, with_merged)
    except PartialResultError as e:
        logger.error(f"{class_id}: {e}")
        return ClassOutcome(
            class_id,
            budget_message=str(e),
            finished=len(e.finished),
            unfinished=len(e.unfinished),
            reductions=budget.reductions,
        )
    except BudgetExceeded as e:
        logger.error(f"{class_id}: {e}")
        return ClassOutcome(class_id, budget_message=str(e), reductions=budget.reductions)
    errors, warnings = verify_report(report)
    return ClassOutcome(
        class_id, report, reductions=budget.reductions, errors=errors, warnings=warnings
    )


def run_embedding_pipeline(
    class_ids: Sequence[str],
    seconds: Optional[float] = None,
    max_reductions: Optional[int] = None,
    with_merged: bool = False,
    jobs: int = 1,
    order: Optional[str] = None,
) -> List[ClassOutcome]:
    """Analyze each class with its own budget; outcomes keep the input order.

    ``order`` defaults to the configured Groebner order. With several workers
    only the reduction counter is carried back into this process's metrics.
    """
    order = order or settings.groebner.order
    for class_id in class_ids:
        check_scope(class_id)
    representatives = [class_representative(c, jobs=jobs).representative for c in class_ids]
    logger.info(f"Analyzing {len(class_ids)} classes with {jobs} worker(s)")
    try:
        outcomes = Parallel(n_jobs=jobs)(
            delayed(_run_one)(c, m, seconds, max_reductions, with_merged, order)
            for c, m in zip(class_ids, representatives)
        )
    except Exception as e:
        logger.error(f"Embedding pipeline failed: {e}")
        raise
    if jobs > 1:
        GROEBNER_REDUCTIONS.inc(sum(o.reductions for o in outcomes))
    exhausted = [o.class_id for o in outcomes if o.exhausted]
    if exhausted:
        logger.warning(f"Budget exhausted for {', '.join(exhausted)}")
    return list(outcomes)
