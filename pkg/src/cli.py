# src/cli.py
"""Command-line front end: classification, subsquares and embedding reports."""
import json
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import pandas as pd
import typer
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.config.settings import settings
from src.embedding.example import analyze_z3_example
from src.embedding.golden import COMPONENT_COUNTS, EMBEDDABLE
from src.embedding.report import Component
from src.exceptions import BudgetExceeded, PartialResultError, ScopeError, TableParseError
from src.incidence.classification import CLASS_IDS, classify_order6, verify_classification
from src.monitoring.metrics import export_metrics
from src.pipelines.embedding_pipeline import ClassOutcome, run_embedding_pipeline
from src.polyring.groebner import Budget
from src.polyring.ring import format_polynomial
from src.quasigroup.catalog import catalog_entry, read_table
from src.quasigroup.subsquares import all_proper_subsquares, brute_force_subsquares
from src.version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4

ALL_CLASSES = "all"

app = typer.Typer(
    name="ldm",
    help="Light dual multinets of order 6 and their weak projective embeddings.",
    no_args_is_help=True,
    add_completion=False,
)


class Emit(str, Enum):
    json = "json"
    tsv = "tsv"


class RunConfig(BaseModel):
    budget_seconds: float = Field(gt=0)
    order: str = "degrevlex"
    emit: Emit = Emit.json
    verify: bool = False
    jobs: int = Field(default=1, ge=1)
    output: Optional[Path] = None
    log_level: str = "INFO"
    class_id: Optional[str] = None

    @field_validator("order")
    @classmethod
    def validate_order(cls, v: str) -> str:
        if v not in ("lex", "degrevlex"):
            raise ValueError("order must be 'lex' or 'degrevlex'")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v!r}")
        return level

    @field_validator("class_id")
    @classmethod
    def validate_class(cls, v: Optional[str]) -> Optional[str]:
        if v is None or v == ALL_CLASSES:
            return v
        normalized = v.upper()
        if normalized not in CLASS_IDS:
            raise ValueError(f"class must be one of M1..M16 or '{ALL_CLASSES}', got {v!r}")
        return normalized

    def class_ids(self) -> List[str]:
        if self.class_id == ALL_CLASSES:
            return list(COMPONENT_COUNTS)
        return [self.class_id] if self.class_id else []


def _fail(message: str, code: int) -> NoReturn:
    typer.echo(message, err=True)
    raise typer.Exit(code)


def _config(ctx: typer.Context, **update: Any) -> RunConfig:
    base: RunConfig = ctx.obj
    try:
        return RunConfig.model_validate({**base.model_dump(), **update})
    except ValidationError as e:
        _fail(f"Invalid arguments: {e}", EXIT_USAGE)


def _emit(config: RunConfig, payload: Any, rows: List[Dict[str, Any]]) -> None:
    if config.emit is Emit.tsv:
        text = pd.DataFrame(rows).to_csv(sep="\t", index=False)
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if config.output is None:
        typer.echo(text, nl=False)
    else:
        config.output.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {config.output}")


def _sizes(sizes: tuple) -> str:
    return ", ".join(str(s) for s in sizes)


@app.callback()
def main(
    ctx: typer.Context,
    budget_seconds: float = typer.Option(
        settings.groebner.budget_seconds, "--budget-seconds", help="Groebner budget per class."
    ),
    order: str = typer.Option(settings.groebner.order, "--order", help="lex or degrevlex."),
    emit: Emit = typer.Option(Emit.json, "--emit", case_sensitive=False),
    verify: bool = typer.Option(False, "--verify", help="Diff results against published tables."),
    jobs: int = typer.Option(settings.classification.jobs, "--jobs", help="Worker processes."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write output here."),
    log_level: str = typer.Option(settings.logging.level, "--log-level"),
    metrics_file: Optional[Path] = typer.Option(
        None, "--metrics-file", help="Write Prometheus metrics on exit."
    ),
) -> None:
    try:
        config = RunConfig(
            budget_seconds=budget_seconds,
            order=order,
            emit=emit,
            verify=verify,
            jobs=jobs,
            output=output,
            log_level=log_level,
        )
    except ValidationError as e:
        _fail(f"Invalid arguments: {e}", EXIT_USAGE)
    logging.basicConfig(
        level=config.log_level, format=settings.logging.format, stream=sys.stderr
    )
    settings.groebner.order = config.order
    if metrics_file is not None:
        ctx.call_on_close(lambda: export_metrics(metrics_file))
    ctx.obj = config


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(__version__)


@app.command()
def classify(ctx: typer.Context) -> None:
    """Classify the one-superline multinets of order 6."""
    config = _config(ctx)
    records = classify_order6(jobs=config.jobs)
    rows = [
        {
            "id": r.class_id,
            "superline_length": r.superline_length,
            "quasigroups": ", ".join(r.sorted_names()),
            "automorphism_order": r.automorphism_order,
            "size": r.size,
        }
        for r in records
    ]
    _emit(config, rows, rows)
    if config.verify:
        diffs = verify_classification(records)
        if diffs:
            _fail("\n".join(diffs), EXIT_MISMATCH)


@app.command()
def subsquares(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="Table file or catalog name such as 6.1."),
) -> None:
    """List the proper subsquares of a Latin square."""
    config = _config(ctx)
    path = Path(source)
    try:
        if path.is_file():
            q = read_table(path.read_text(encoding="utf-8"))
            q = q if q.name else q.renamed(path.name)
        else:
            q = catalog_entry(source)
    except TableParseError as e:
        _fail(f"{source}: {e}", EXIT_USAGE)
    except (KeyError, ValueError) as e:
        _fail(f"Unknown table {source!r}: {e}", EXIT_USAGE)
    found = all_proper_subsquares(q)
    rows = [
        {"order": s.order, "s1": list(s.s1), "s2": list(s.s2), "s3": list(s.s3)}
        for s in found
    ]
    _emit(config, {"table": q.name, "subsquares": rows}, rows)
    if config.verify and set(found) != set(brute_force_subsquares(q)):
        _fail(f"{q.name}: subsquares disagree with exhaustive enumeration", EXIT_MISMATCH)


def _run_classes(
    config: RunConfig, class_ids: List[str], with_merged: bool
) -> List[ClassOutcome]:
    try:
        return run_embedding_pipeline(
            class_ids,
            seconds=config.budget_seconds,
            max_reductions=settings.groebner.max_reductions,
            with_merged=with_merged,
            jobs=config.jobs,
            order=config.order,
        )
    except ScopeError as e:
        _fail(str(e), EXIT_USAGE)


def _finish(config: RunConfig, outcomes: List[ClassOutcome]) -> None:
    exhausted = [o for o in outcomes if o.exhausted]
    for o in exhausted:
        typer.echo(
            f"{o.class_id}: {o.budget_message} ({o.finished} finished, "
            f"{o.unfinished} unfinished branches)",
            err=True,
        )
    if exhausted:
        raise typer.Exit(EXIT_BUDGET)
    if config.verify:
        errors = [e for o in outcomes for e in o.errors]
        if errors:
            _fail("\n".join(errors), EXIT_MISMATCH)


@app.command()
def embed(
    ctx: typer.Context,
    class_id: str = typer.Option(..., "--class", help="M3..M16 or 'all'."),
) -> None:
    """Minimal primes, admissibility and dimension for a class."""
    config = _config(ctx, class_id=class_id)
    outcomes = _run_classes(config, config.class_ids(), with_merged=False)
    reports = [o.report for o in outcomes if o.report is not None]
    rows = []
    for r in reports:
        counts = r.counts()
        rows.append(
            {
                "class": r.class_id,
                "components": counts.components,
                "admissible": counts.admissible,
                "dim": counts.dimension if counts.dimension is not None else "-",
                "embeds": counts.embeds,
            }
        )
    payload = [r.to_dict() for r in reports]
    _emit(config, payload[0] if len(payload) == 1 else payload, rows)
    _finish(config, outcomes)


@app.command()
def merged(
    ctx: typer.Context,
    class_id: str = typer.Option(..., "--class", help="An embeddable class or 'all'."),
) -> None:
    """Merged blocks of the admissible component of a class."""
    config = _config(ctx, class_id=class_id)
    ids = list(EMBEDDABLE) if config.class_id == ALL_CLASSES else config.class_ids()
    for c in ids:
        if c in COMPONENT_COUNTS and c not in EMBEDDABLE:
            _fail(f"{c} has no weak projective embedding and no merged blocks", EXIT_USAGE)
    outcomes = _run_classes(config, ids, with_merged=True)
    rows = []
    payload = []
    for o in outcomes:
        if o.report is None:
            continue
        summary = o.report.merged_summary()
        assert summary is not None
        rows.append(
            {
                "class": o.class_id,
                "new_long_lines": summary.new_long_lines,
                "sizes_p1": _sizes(summary.part_sizes[0]),
                "sizes_p2": _sizes(summary.part_sizes[1]),
                "sizes_p3": _sizes(summary.part_sizes[2]),
            }
        )
        payload.append({**o.report.to_dict(), "summary": summary.to_dict()})
    _emit(config, payload[0] if len(payload) == 1 else payload, rows)
    for o in outcomes:
        for w in o.warnings:
            typer.echo(f"warning: {w}", err=True)
    _finish(config, outcomes)


def _component_row(index: int, c: Component) -> Dict[str, Any]:
    return {
        "component": index + 1,
        "admissible": c.admissible,
        "dim": c.dimension if c.dimension is not None else "-",
        "generators": "; ".join(format_polynomial(g) for g in c.ideal.groebner_basis()),
    }


@app.command("example-z3")
def example_z3(ctx: typer.Context) -> None:
    """Minimal primes of the nine-point cyclic example."""
    config = _config(ctx)
    try:
        result = analyze_z3_example(Budget(config.budget_seconds, settings.groebner.max_reductions))
    except (BudgetExceeded, PartialResultError) as e:
        _fail(str(e), EXIT_BUDGET)
    rows = [_component_row(i, c) for i, c in enumerate(result.components)]
    payload = {
        "components": [c.to_dict() for c in result.components],
        "matches_published": result.matches_published,
    }
    _emit(config, payload, rows)
    if config.verify and not result.matches_published:
        _fail("\n".join(result.mismatches), EXIT_MISMATCH)


if __name__ == "__main__":
    app()
