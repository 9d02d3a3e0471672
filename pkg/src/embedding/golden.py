# src/embedding/golden.py
"""Published embedding results for the one-superline multinets of order 6."""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class ComponentCounts:
    components: int
    admissible: int
    dimension: Optional[int]

    @property
    def embeds(self) -> bool:
        return self.admissible > 0


@dataclass(frozen=True)
class MergedSummary:
    """New long lines and the sizes of merged blocks inside each part."""

    new_long_lines: int = 0
    part_sizes: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]] = ((), (), ())
    ambiguous: bool = field(default=False, compare=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "new_long_lines": self.new_long_lines,
            "part_sizes": [list(s) for s in self.part_sizes],
        }


COMPONENT_COUNTS: Dict[str, ComponentCounts] = {
    "M3": ComponentCounts(6, 1, 2),
    "M4": ComponentCounts(3, 1, 2),
    "M5": ComponentCounts(5, 0, None),
    "M6": ComponentCounts(1, 0, None),
    "M7": ComponentCounts(5, 0, None),
    "M8": ComponentCounts(1, 1, 1),
    "M9": ComponentCounts(2, 1, 1),
    "M10": ComponentCounts(4, 1, 1),
    "M11": ComponentCounts(2, 0, None),
    "M12": ComponentCounts(3, 1, 2),
    "M13": ComponentCounts(2, 1, 1),
    "M14": ComponentCounts(4, 1, 1),
    "M15": ComponentCounts(1, 1, 1),
    "M16": ComponentCounts(1, 1, 1),
}

# The published M14 entry for the third part reads "3, 3  1"; taken as two
# blocks of size 3 and flagged so deviations are reported as warnings.
MERGED_SUMMARIES: Dict[str, MergedSummary] = {
    "M3": MergedSummary(2),
    "M4": MergedSummary(0, ((3, 3), (3, 3), (3, 3))),
    "M8": MergedSummary(0, ((), (), (5,))),
    "M9": MergedSummary(0, ((), (), (3, 3))),
    "M10": MergedSummary(0, ((), (), (3, 3, 3, 3))),
    "M12": MergedSummary(0, ((), (), (3,))),
    "M13": MergedSummary(0),
    "M14": MergedSummary(1, ((3, 3), (3, 3), (3, 3)), ambiguous=True),
    "M15": MergedSummary(0, ((3, 3), (), ())),
    "M16": MergedSummary(1, ((), (), (3, 3))),
}

EMBEDDABLE: Tuple[str, ...] = tuple(k for k, v in COMPONENT_COUNTS.items() if v.embeds)

OUT_OF_SCOPE: Tuple[str, ...] = ("M1", "M2")

Z3_PRIME_AT_INFINITY = ("t13",)

Z3_ADMISSIBLE_PRIME = (
    "t8 - t12",
    "t6 - t10",
    "t4 + t5 - t10 - t11",
    "t3 - t11",
    "t2 + t7 - t9 - t12",
    "t1 - t9",
    "t5*t7 - t5*t9 - t7*t11 + t9*t10 + t9*t11 - t9*t12 - t10*t11 + t11*t12",
)
