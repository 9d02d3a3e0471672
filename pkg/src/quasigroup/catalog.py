# src/quasigroup/catalog.py
"""The twelve main-class representatives of quasigroups of order 6.

Tables are kept one-based exactly as published and converted on load. The same
tables ship as text files under ``data/`` in the Cayley-table text format:
first line ``n``, then ``n`` rows of one-based entries, optional ``# name``.
"""
import logging
import re
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple

from src.exceptions import TableParseError
from src.quasigroup.latin_square import LatinSquare

logger = logging.getLogger(__name__)

_CATALOG_TABLES: Tuple[Tuple[str, Tuple[Tuple[int, ...], ...]], ...] = (
    ("#6.1.1.1", ((1, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 1), (3, 4, 5, 6, 1, 2),
                  (4, 5, 6, 1, 2, 3), (5, 6, 1, 2, 3, 4), (6, 1, 2, 3, 4, 5))),
    ("#6.2.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 5, 6, 3, 4), (3, 6, 1, 5, 4, 2),
                  (4, 5, 6, 1, 2, 3), (5, 4, 2, 3, 6, 1), (6, 3, 4, 2, 1, 5))),
    ("#6.3.1.1", ((1, 2, 3, 4, 5, 6), (2, 3, 1, 5, 6, 4), (3, 1, 2, 6, 4, 5),
                  (4, 6, 5, 2, 1, 3), (5, 4, 6, 3, 2, 1), (6, 5, 4, 1, 3, 2))),
    ("#6.4.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 4, 3, 6, 5), (3, 4, 5, 6, 1, 2),
                  (4, 3, 6, 5, 2, 1), (5, 6, 1, 2, 4, 3), (6, 5, 2, 1, 3, 4))),
    ("#6.5.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 5, 6, 3, 4), (3, 6, 2, 5, 4, 1),
                  (4, 5, 6, 2, 1, 3), (5, 4, 1, 3, 6, 2), (6, 3, 4, 1, 2, 5))),
    ("#6.6.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 4, 5, 6, 3), (3, 6, 2, 1, 4, 5),
                  (4, 5, 6, 2, 3, 1), (5, 3, 1, 6, 2, 4), (6, 4, 5, 3, 1, 2))),
    ("#6.7.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 4, 3, 6, 5), (3, 5, 1, 6, 4, 2),
                  (4, 6, 5, 1, 2, 3), (5, 3, 6, 2, 1, 4), (6, 4, 2, 5, 3, 1))),
    ("#6.8.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 6, 5, 3, 4), (3, 6, 1, 2, 4, 5),
                  (4, 5, 2, 1, 6, 3), (5, 3, 4, 6, 1, 2), (6, 4, 5, 3, 2, 1))),
    ("#6.9.1.1", ((1, 2, 3, 4, 5, 6), (2, 3, 1, 6, 4, 5), (3, 1, 2, 5, 6, 4),
                  (4, 6, 5, 1, 2, 3), (5, 4, 6, 2, 3, 1), (6, 5, 4, 3, 1, 2))),
    ("#6.10.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 6, 5, 4, 3), (3, 5, 1, 2, 6, 4),
                   (4, 6, 2, 1, 3, 5), (5, 3, 4, 6, 2, 1), (6, 4, 5, 3, 1, 2))),
    ("#6.11.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 4, 5, 6, 3), (3, 4, 2, 6, 1, 5),
                   (4, 5, 6, 2, 3, 1), (5, 6, 1, 3, 2, 4), (6, 3, 5, 1, 4, 2))),
    ("#6.12.1.1", ((1, 2, 3, 4, 5, 6), (2, 1, 5, 6, 4, 3), (3, 5, 4, 2, 6, 1),
                   (4, 6, 2, 3, 1, 5), (5, 4, 6, 1, 3, 2), (6, 3, 1, 5, 2, 4))),
)

_LABEL = re.compile(r"^#?\s*(\d+)\.(\d+)(?:\.(\d+)\.(\d+))?$")


def catalog_name(label: str) -> str:
    """Normalize ``6.4``, ``6.4.1.1`` or ``#6.4.1.1`` to ``#6.4.1.1``."""
    match = _LABEL.match(label.strip())
    if not match:
        raise ValueError(f"Not a catalog label: {label!r}")
    order, index, a, b = match.groups()
    return f"#{order}.{index}.{a or 1}.{b or 1}"


def short_name(label: str) -> str:
    """``#6.4.1.1`` -> ``6.4``."""
    order, index = catalog_name(label)[1:].split(".")[:2]
    return f"{order}.{index}"


def read_table(text: str, name: Optional[str] = None) -> LatinSquare:
    """Parse the Cayley-table text format into a zero-based square."""
    rows: List[List[int]] = []
    n: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if name is None:
                name = line[1:].strip() or None
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError as e:
            raise TableParseError(f"non-integer entry in {line!r}", lineno) from e
        if n is None:
            if len(values) != 1 or values[0] <= 0:
                raise TableParseError("first line must be the order n", lineno)
            n = values[0]
            continue
        if len(values) != n:
            raise TableParseError(f"expected {n} entries, got {len(values)}", lineno)
        if any(not 1 <= v <= n for v in values):
            raise TableParseError(f"entries must lie in 1..{n}", lineno)
        if len(rows) == n:
            raise TableParseError(f"more than {n} rows", lineno)
        rows.append([v - 1 for v in values])
    if n is None or len(rows) != n:
        raise TableParseError(
            f"expected {n} rows, got {len(rows)}", len(text.splitlines()) + 1
        )
    try:
        return LatinSquare(rows, name=name)
    except ValueError as e:
        raise TableParseError(str(e), len(text.splitlines())) from e


def format_table(q: LatinSquare) -> str:
    lines = [str(q.order)]
    lines += [" ".join(str(v + 1) for v in row) for row in q.rows()]
    if q.name:
        lines.append(f"# {q.name}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def _catalog() -> Tuple[LatinSquare, ...]:
    squares = []
    for name, table in _CATALOG_TABLES:
        try:
            squares.append(LatinSquare([[v - 1 for v in row] for row in table], name))
        except ValueError as e:
            logger.error(f"Embedded catalog entry {name} is corrupted: {e}")
            raise RuntimeError(f"corrupted catalog entry {name}") from e
    return tuple(squares)


def load_catalog() -> List[LatinSquare]:
    return list(_catalog())


def catalog_entry(label: str) -> LatinSquare:
    wanted = catalog_name(label)
    for q in _catalog():
        if q.name == wanted:
            return q
    raise KeyError(f"No catalog entry {wanted}")


def load_catalog_files() -> Dict[str, LatinSquare]:
    """Read the shipped data files, keyed by normalized catalog name."""
    result = {}
    data = resources.files("src.quasigroup") / "data"
    for entry in sorted(data.iterdir(), key=lambda p: p.name):
        if not entry.name.endswith(".txt"):
            continue
        q = read_table(entry.read_text(encoding="utf-8"))
        label = catalog_name(q.name or entry.name[: -len(".txt")])
        result[label] = q.renamed(label)
    return result
