"""Tests for the per-class embedding pipeline"""
from types import SimpleNamespace

import pytest

from src.config.settings import settings
from src.exceptions import BudgetExceeded
from src.monitoring.metrics import GROEBNER_REDUCTIONS
from src.pipelines import embedding_pipeline
from src.pipelines.embedding_pipeline import _run_one, run_embedding_pipeline

pytestmark = pytest.mark.unit


@pytest.fixture
def restore_order():
    saved = settings.groebner.order
    yield
    settings.groebner.order = saved


@pytest.fixture
def recorded(mocker):
    """Replace the analysis with a stub that records the order it ran under"""
    seen = []

    def fake_analyze(class_id, m, budget, with_merged):
        seen.append((class_id, settings.groebner.order))
        budget.reductions += 7
        return SimpleNamespace(class_id=class_id)

    mocker.patch.object(embedding_pipeline, "analyze_multinet", side_effect=fake_analyze)
    mocker.patch.object(embedding_pipeline, "verify_report", return_value=([], []))
    mocker.patch.object(
        embedding_pipeline,
        "class_representative",
        side_effect=lambda c, jobs=1: SimpleNamespace(representative=None),
    )
    return seen


class TestRunOne:
    def test_order_applied_in_worker(self, recorded, restore_order):
        settings.groebner.order = "degrevlex"
        outcome = _run_one("M5", None, 10.0, None, False, "lex")
        assert recorded == [("M5", "lex")]
        assert outcome.reductions == 7
        assert not outcome.exhausted

    def test_budget_exhaustion_keeps_reduction_count(self, mocker):
        def exhaust(class_id, m, budget, with_merged):
            budget.reductions = 3
            raise BudgetExceeded("out of time", partial=[], pending=0)

        mocker.patch.object(embedding_pipeline, "analyze_multinet", side_effect=exhaust)
        outcome = _run_one("M5", None, 10.0, None, False)
        assert outcome.exhausted
        assert outcome.reductions == 3


class TestRunEmbeddingPipeline:
    def test_order_reaches_every_class(self, recorded, restore_order):
        settings.groebner.order = "degrevlex"
        outcomes = run_embedding_pipeline(["M5", "M8"], seconds=10.0, order="lex")
        assert [o.class_id for o in outcomes] == ["M5", "M8"]
        assert recorded == [("M5", "lex"), ("M8", "lex")]

    def test_defaults_to_configured_order(self, recorded, restore_order):
        settings.groebner.order = "lex"
        run_embedding_pipeline(["M3"], seconds=10.0)
        assert recorded == [("M3", "lex")]

    def test_single_worker_does_not_double_count(self, recorded):
        before = GROEBNER_REDUCTIONS._value.get()
        run_embedding_pipeline(["M3"], seconds=10.0)
        assert GROEBNER_REDUCTIONS._value.get() == before
