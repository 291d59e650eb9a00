"""JSON views of engine values.

One place defines the wire schema, so the HTTP service and the CLI's --json
mode cannot drift apart. Levels serialize as plain integers, with the
string "infinity" for the unreachable case; formulas always travel in their
rendered grammar form.
"""

from __future__ import annotations

from .formulas import Formula, render
from .relevance import INFINITY, RelevanceGraph, RelLevel, relevance_profile
from .sequences import (
    BeliefSequence,
    GammaResult,
    QueryContext,
    answer_query,
    build_gamma,
    saturation_level,
)


def level_json(level: RelLevel) -> int | str:
    if level == INFINITY:
        return "infinity"
    return int(level)


def sequence_json(seq: BeliefSequence) -> list[dict]:
    return [{"index": index, "formula": render(formula)} for index, formula in seq]


def gamma_json(result: GammaResult) -> list[dict]:
    levels = {entry.index: entry.level for entry in result.trace}
    return [
        {"index": index, "formula": render(formula), "rel": level_json(levels[index])}
        for index, formula in result.accepted
    ]


def trace_json(result: GammaResult) -> list[dict]:
    return [
        {
            "index": entry.index,
            "formula": render(entry.formula),
            "rel": level_json(entry.level),
            "decision": entry.decision,
        }
        for entry in result.trace
    ]


def query_payload(seq: BeliefSequence, ctx: QueryContext) -> dict:
    """The full query response: verdict plus the audit trail behind it."""
    result = build_gamma(seq, ctx)
    return {
        "answer": answer_query(seq, ctx).value,
        "k_used": ctx.k,
        "mode": ctx.mode,
        "query": render(ctx.query),
        "gamma": gamma_json(result),
        "trace": trace_json(result),
    }


def relevance_payload(seq: BeliefSequence, formula: Formula) -> dict:
    """Per-element levels plus the vocabulary-sharing edges, for rendering."""
    profile = relevance_profile(formula, seq)
    rendered = {index: render(f) for index, f in seq}
    return {
        "formula": render(formula),
        "profile": [
            {"index": index, "formula": rendered[index], "rel": level_json(level)}
            for index, level in profile
        ],
        "edges": [list(pair) for pair in RelevanceGraph.from_entries(seq).edges()],
        "saturation_level": saturation_level(seq, formula),
    }
