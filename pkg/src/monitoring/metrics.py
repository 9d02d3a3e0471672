# src/monitoring/metrics.py
import logging
from pathlib import Path
from typing import Union

from prometheus_client import REGISTRY, Counter, Histogram, write_to_textfile

logger = logging.getLogger(__name__)

GROEBNER_REDUCTIONS = Counter(
    "ldm_groebner_reductions_total", "Critical pairs reduced by Buchberger"
)
GROEBNER_SECONDS = Histogram(
    "ldm_groebner_seconds",
    "Wall time of a single Groebner basis computation",
    buckets=(0.01, 0.1, 0.5, 1, 5, 30, 120, 600, float("inf")),
)
SPLITTING_NODES = Counter(
    "ldm_splitting_nodes_total", "Splitting tree nodes by outcome", ["outcome"]
)
ISOMORPHISM_TESTS = Counter(
    "ldm_isomorphism_tests_total", "Incidence structure isomorphism searches"
)


def export_metrics(path: Union[str, Path]) -> None:
    """Write the default registry in the Prometheus text format."""
    write_to_textfile(str(path), REGISTRY)
    logger.info(f"Metrics written to {path}")
