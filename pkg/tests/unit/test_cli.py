"""Tests for the command-line front end"""
import json

import pytest
from typer.testing import CliRunner

from src.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, app
from src.quasigroup.catalog import catalog_entry
from src.quasigroup.subsquares import all_proper_subsquares
from src.version import __version__

pytestmark = pytest.mark.unit


@pytest.fixture
def runner():
    return CliRunner()


class TestGlobalOptions:
    def test_version(self, runner):
        result = runner.invoke(app, ["version"])
        assert result.exit_code == EXIT_OK
        assert __version__ in result.output

    @pytest.mark.parametrize(
        "args",
        [
            ["--order", "deglex", "version"],
            ["--budget-seconds", "0", "version"],
            ["--jobs", "0", "version"],
            ["--log-level", "chatty", "version"],
        ],
    )
    def test_invalid_options(self, runner, args):
        result = runner.invoke(app, args)
        assert result.exit_code == EXIT_USAGE

    def test_metrics_file(self, runner, tmp_path):
        path = tmp_path / "metrics.prom"
        result = runner.invoke(app, ["--metrics-file", str(path), "version"])
        assert result.exit_code == EXIT_OK
        assert "ldm_groebner_reductions_total" in path.read_text()


class TestSubsquares:
    def test_catalog_entry_as_json(self, runner, tmp_path):
        out = tmp_path / "subsquares.json"
        result = runner.invoke(app, ["--output", str(out), "subsquares", "6.1"])
        assert result.exit_code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["table"] == "#6.1.1.1"
        expected = all_proper_subsquares(catalog_entry("6.1"))
        assert len(data["subsquares"]) == len(expected)
        assert {s["order"] for s in data["subsquares"]} == {2, 3}

    def test_tsv(self, runner):
        result = runner.invoke(app, ["--emit", "tsv", "subsquares", "6.1"])
        assert result.exit_code == EXIT_OK
        assert "order\ts1\ts2\ts3" in result.output

    def test_table_file_with_verification(self, runner, tmp_path):
        table = tmp_path / "z3.txt"
        table.write_text("# Z3\n3\n1 2 3\n2 3 1\n3 1 2\n")
        out = tmp_path / "out.json"
        result = runner.invoke(app, ["--verify", "-o", str(out), "subsquares", str(table)])
        assert result.exit_code == EXIT_OK
        assert json.loads(out.read_text()) == {"table": "Z3", "subsquares": []}

    def test_malformed_file_reports_line(self, runner, tmp_path):
        table = tmp_path / "bad.txt"
        table.write_text("3\n1 2 3\n2 3\n")
        result = runner.invoke(app, ["subsquares", str(table)])
        assert result.exit_code == EXIT_USAGE
        assert "line 3" in result.output

    def test_unknown_source(self, runner):
        result = runner.invoke(app, ["subsquares", "no-such-table"])
        assert result.exit_code == EXIT_USAGE


class TestEmbeddingCommands:
    @pytest.mark.parametrize("class_id", ["M1", "M2", "M17"])
    def test_embed_out_of_scope(self, runner, class_id):
        result = runner.invoke(app, ["embed", "--class", class_id])
        assert result.exit_code == EXIT_USAGE

    def test_merged_without_embedding(self, runner):
        result = runner.invoke(app, ["merged", "--class", "M6"])
        assert result.exit_code == EXIT_USAGE
        assert "no weak projective embedding" in result.output

    @pytest.mark.slow
    def test_budget_exhaustion(self, runner):
        result = runner.invoke(app, ["--budget-seconds", "0.001", "embed", "--class", "M5"])
        assert result.exit_code == EXIT_BUDGET
        assert "M5" in result.output


@pytest.mark.slow
class TestClassify:
    def test_verified_classification(self, runner, tmp_path):
        out = tmp_path / "classes.json"
        result = runner.invoke(app, ["--verify", "-o", str(out), "classify"])
        assert result.exit_code == EXIT_OK
        rows = json.loads(out.read_text())
        assert [r["id"] for r in rows] == [f"M{i}" for i in range(1, 17)]
        assert sum(r["size"] for r in rows) > 16
