from src.embedding.admissibility import is_admissible
from src.embedding.example import ExampleResult, analyze_z3_example
from src.embedding.golden import COMPONENT_COUNTS, MERGED_SUMMARIES, MergedSummary
from src.embedding.merged import MergedBlock, merged_block_summary, merged_blocks
from src.embedding.preembedding import (
    PreEmbedding,
    collinearity_ideal,
    standard_preembedding,
    z3_example_preembedding,
)
from src.embedding.primes import minimal_primes
from src.embedding.report import (
    ComponentReport,
    Verdict,
    analyze,
    embedding_verdict,
    verify_report,
)

__all__ = [
    "COMPONENT_COUNTS",
    "MERGED_SUMMARIES",
    "ComponentReport",
    "ExampleResult",
    "MergedBlock",
    "MergedSummary",
    "PreEmbedding",
    "Verdict",
    "analyze",
    "analyze_z3_example",
    "collinearity_ideal",
    "embedding_verdict",
    "is_admissible",
    "merged_block_summary",
    "merged_blocks",
    "minimal_primes",
    "standard_preembedding",
    "verify_report",
    "z3_example_preembedding",
]
