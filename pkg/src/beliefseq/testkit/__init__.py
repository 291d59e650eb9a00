"""Verification toolkit: independent oracles, seeded generators, and the
conformance suites that score every documented behavioural claim."""

from .claims import (
    EXPECTED_STATUS,
    ClaimReport,
    conformance_failures,
    epstein_report,
    inference_rules_report,
    render_table,
    run_all_reports,
    structural_report,
    worked_example_checks,
)
from .generators import (
    DEFAULT_POOL,
    equal_language_pair,
    random_formula,
    random_sequence,
    weaker_same_language,
    wrap_equivalent,
)
from .oracles import rel_oracle, smallest_language_oracle

__all__ = [
    "EXPECTED_STATUS",
    "ClaimReport",
    "conformance_failures",
    "epstein_report",
    "inference_rules_report",
    "render_table",
    "run_all_reports",
    "structural_report",
    "worked_example_checks",
    "DEFAULT_POOL",
    "equal_language_pair",
    "random_formula",
    "random_sequence",
    "weaker_same_language",
    "wrap_equivalent",
    "rel_oracle",
    "smallest_language_oracle",
]
