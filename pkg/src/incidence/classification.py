# src/incidence/classification.py
"""Isomorphism classes of light dual multinets of order 6 with one superline."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from joblib import Parallel, delayed

from src.exceptions import ClassificationError
from src.incidence.isomorphism import automorphism_group, is_isomorphic
from src.incidence.structure import (
    Multinet,
    line_length,
    multinet_with_superline,
    superlines,
    well_index,
)
from src.quasigroup.catalog import load_catalog
from src.quasigroup.subsquares import all_proper_subsquares

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PublishedClass:
    class_id: str
    superline_length: int
    names: FrozenSet[str]
    automorphism_order: int


def _row(class_id: str, length: int, names: Tuple[str, ...], order: int) -> PublishedClass:
    return PublishedClass(class_id, length, frozenset(names), order)


# Published classification; automorphism orders are the orders of the listed groups.
PUBLISHED_CLASSES: Tuple[PublishedClass, ...] = (
    _row("M1", 3, ("6.1", "6.9"), 324),
    _row("M2", 3, ("6.2", "6.3", "6.9"), 324),
    _row("M3", 2, ("6.1", "6.4"), 48),
    _row("M4", 2, ("6.2", "6.5"), 48),
    _row("M5", 2, ("6.4",), 48),
    _row("M6", 2, ("6.7",), 48),
    _row("M7", 2, ("6.5",), 16),
    _row("M8", 2, ("6.8", "6.11"), 16),
    _row("M9", 2, ("6.10",), 16),
    _row("M10", 2, ("6.11",), 16),
    _row("M11", 2, ("6.9", "6.12"), 8),
    _row("M12", 2, ("6.12",), 8),
    _row("M13", 2, ("6.6", "6.7"), 6),
    _row("M14", 2, ("6.5", "6.10"), 4),
    _row("M15", 2, ("6.7", "6.10"), 4),
    _row("M16", 2, ("6.11", "6.12"), 4),
)

CLASS_IDS: Tuple[str, ...] = tuple(row.class_id for row in PUBLISHED_CLASSES)


@dataclass(frozen=True)
class ClassRecord:
    class_id: str
    superline_length: int
    names: FrozenSet[str]
    automorphism_order: int
    representative: Multinet
    size: int

    def sorted_names(self) -> List[str]:
        return sorted(self.names, key=lambda s: tuple(int(p) for p in s.split(".")))


def build_order6_multinets() -> List[Multinet]:
    """Every (catalog table, proper subsquare) multinet, in construction order."""
    multinets = []
    for q in load_catalog():
        for s in all_proper_subsquares(q):
            multinets.append(multinet_with_superline(q, s))
    logger.info(f"Built {len(multinets)} one-superline multinets of order 6")
    return multinets


def partition_by_isomorphism(multinets: List[Multinet]) -> List[List[int]]:
    """Greedy classes; the first unassigned multinet represents each class."""
    remaining = list(range(len(multinets)))
    classes = []
    while remaining:
        head = multinets[remaining[0]].structure
        members = [
            i for i in remaining if i == remaining[0]
            or is_isomorphic(head, multinets[i].structure)
        ]
        classes.append(members)
        remaining = [i for i in remaining if i not in members]
    return classes


def _automorphism_order(m: Multinet) -> int:
    return automorphism_group(m.structure).order


def classify(multinets: List[Multinet], jobs: int = 1) -> List[ClassRecord]:
    classes = partition_by_isomorphism(multinets)
    logger.info(f"{len(multinets)} multinets fall into {len(classes)} classes")
    representatives = [well_index(multinets[members[0]]) for members in classes]
    orders = Parallel(n_jobs=jobs)(
        delayed(_automorphism_order)(rep) for rep in representatives
    )
    table = {(row.names, row.automorphism_order): row for row in PUBLISHED_CLASSES}
    records: Dict[str, ClassRecord] = {}
    for members, rep, order in zip(classes, representatives, orders):
        names = frozenset(multinets[i].quasigroups[0] for i in members)
        row = table.get((names, order))
        if row is None:
            logger.error(f"No published class with names {sorted(names)} and order {order}")
            raise ClassificationError(
                f"unknown class key ({sorted(names)}, {order})"
            )
        if row.class_id in records:
            raise ClassificationError(f"class key collision on {row.class_id}")
        length = max(line_length(rep, b) for b in superlines(rep))
        records[row.class_id] = ClassRecord(
            row.class_id, length, names, order, rep, len(members)
        )
    return [records[cid] for cid in CLASS_IDS if cid in records]


@lru_cache(maxsize=4)
def _classify_order6(jobs: int) -> Tuple[ClassRecord, ...]:
    return tuple(classify(build_order6_multinets(), jobs=jobs))


def classify_order6(jobs: int = 1) -> List[ClassRecord]:
    return list(_classify_order6(jobs))


def class_representative(class_id: str, jobs: int = 1) -> ClassRecord:
    for record in classify_order6(jobs):
        if record.class_id == class_id:
            return record
    raise KeyError(f"Unknown class {class_id}")


def verify_classification(records: List[ClassRecord]) -> List[str]:
    """Human-readable differences against the published table; empty on match."""
    diffs = []
    computed = {r.class_id: r for r in records}
    for row in PUBLISHED_CLASSES:
        got = computed.get(row.class_id)
        if got is None:
            diffs.append(f"{row.class_id}: missing")
            continue
        expected = (row.superline_length, row.names, row.automorphism_order)
        actual = (got.superline_length, got.names, got.automorphism_order)
        if expected != actual:
            diffs.append(f"{row.class_id}: expected {expected}, got {actual}")
    if len(records) != len(PUBLISHED_CLASSES):
        diffs.append(f"expected {len(PUBLISHED_CLASSES)} classes, got {len(records)}")
    return diffs
