"""Belief sequences and relevance-guided query answering.

A belief sequence is an append-only list of formulas; position is arrival
order, later means newer. Nothing is ever merged or rewritten: revision is
concatenation, so contradictory episodes coexist and queries sort them out.

Answering a query proceeds in two steps. First every element is ranked by
its relevance level to the query, most relevant first, ties won by the
newer element; elements beyond the query's level bound k stay out. Then a
single greedy pass builds the gamma set: walk the ranking and keep each
element unless the kept set already refutes it. The query is answered yes
when gamma entails it, no when gamma entails its negation, and
no_information otherwise. Because rejection requires refutation by
formulas ranked earlier, gamma is consistent by construction and grows
monotonically with k.

Two scan modes: liberal (default) keeps scanning past refused elements;
strict stops the scan at the first refusal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .formulas import Formula, Not, parse, render
from .relevance import INFINITY, RelLevel, language_relevance_level, relevance_profile
from .semantics import (
    ENUMERATION_CAP,
    Language,
    basis_atoms,
    entails,
    enumerate_canonical_queries,
    smallest_language,
    truth_table_bits,
)

LIBERAL = "liberal"
STRICT = "strict"

ACCEPTED = "accepted"
REJECTED_INCONSISTENT = "rejected_inconsistent"
REJECTED_IRRELEVANT = "rejected_irrelevant"
HALTED = "halted"


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    NO_INFORMATION = "no_information"


@dataclass(frozen=True)
class BeliefSequence:
    """Ordered, append-only formulas, each tagged with its arrival index."""

    entries: tuple[tuple[int, Formula], ...] = ()

    @classmethod
    def from_formulas(cls, formulas: Iterable[Formula]) -> "BeliefSequence":
        return cls(entries=tuple(enumerate(formulas)))

    def revise(self, formula: Formula) -> "BeliefSequence":
        """Append one formula, verbatim, under a fresh maximal index."""
        next_index = self.entries[-1][0] + 1 if self.entries else 0
        return BeliefSequence(entries=self.entries + ((next_index, formula),))

    def pop(self) -> "BeliefSequence":
        """Drop the newest element."""
        if not self.entries:
            raise ValueError("empty sequence")
        return BeliefSequence(entries=self.entries[:-1])

    def formulas(self) -> list[Formula]:
        return [formula for _, formula in self.entries]

    def formula_set(self) -> frozenset[Formula]:
        """The element set: duplicates collapsed, order forgotten."""
        return frozenset(formula for _, formula in self.entries)

    def __iter__(self) -> Iterator[tuple[int, Formula]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{i}: {render(f)}" for i, f in self.entries)
        return f"BeliefSequence[{inner}]"


def initial_segment(a: BeliefSequence, b: BeliefSequence) -> bool:
    """True when b's formula list extends a's by zero or more newer formulas."""
    fa, fb = a.formulas(), b.formulas()
    return len(fa) <= len(fb) and fb[: len(fa)] == fa


@dataclass(frozen=True)
class QueryContext:
    """Everything that parameterises one query.

    `query_language` defaults to the query's minimal vocabulary; overriding
    it widens what counts as the query's subject matter and must be a
    superset of the default.
    """

    query: Formula
    k: int = 0
    mode: str = LIBERAL
    query_language: Language | None = None

    def __post_init__(self) -> None:
        if self.mode not in (LIBERAL, STRICT):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.query_language is not None:
            lang = frozenset(self.query_language)
            object.__setattr__(self, "query_language", lang)
            if not lang >= smallest_language(self.query):
                raise ValueError("query_language must contain the query's smallest language")

    def resolved_language(self) -> Language:
        if self.query_language is not None:
            return self.query_language
        return smallest_language(self.query)


@dataclass(frozen=True)
class TraceEntry:
    index: int
    formula: Formula
    level: RelLevel
    decision: str


@dataclass(frozen=True)
class GammaResult:
    """Outcome of the greedy pass: the kept set plus a decision per element."""

    accepted: tuple[tuple[int, Formula], ...]
    trace: tuple[TraceEntry, ...]

    @property
    def accepted_formulas(self) -> list[Formula]:
        return [formula for _, formula in self.accepted]

    def accepted_set(self) -> frozenset[Formula]:
        return frozenset(self.accepted_formulas)


def _ranked(seq: BeliefSequence, ctx: QueryContext) -> list[tuple[RelLevel, int, Formula]]:
    # full ranking, irrelevant elements included at the tail
    probe = ctx.resolved_language()
    context_langs = [smallest_language(f) for f in seq.formula_set()]
    rows = [
        (language_relevance_level(probe, smallest_language(formula), context_langs), index, formula)
        for index, formula in seq
    ]
    rows.sort(key=lambda row: (row[0], -row[1]))
    return rows


def priority_order(seq: BeliefSequence, ctx: QueryContext) -> list[tuple[int, Formula, RelLevel]]:
    """Elements within the level bound, most relevant first, newer first on ties.

    Elements beyond ctx.k are excluded here; `build_gamma` records them as
    rejected_irrelevant in its trace.
    """
    return [(index, formula, level) for level, index, formula in _ranked(seq, ctx) if level <= ctx.k]


def build_gamma(seq: BeliefSequence, ctx: QueryContext) -> GammaResult:
    """Greedy consistent-subset pass over the priority order.

    Every sequence element appears in the trace exactly once, in ranking
    order. An element is kept unless the kept set already refutes it; in
    strict mode the first refutation stops the scan and everything after it
    is recorded as halted.
    """
    basis = basis_atoms(seq.formulas())
    full = (1 << (1 << len(basis))) - 1
    models = full
    accepted: list[tuple[int, Formula]] = []
    trace: list[TraceEntry] = []
    halted = False
    for level, index, formula in _ranked(seq, ctx):
        if level > ctx.k:
            decision = REJECTED_IRRELEVANT
        elif halted:
            decision = HALTED
        else:
            table = truth_table_bits(formula, basis)
            if models & table == 0:
                # kept set entails the negation of the candidate
                if ctx.mode == STRICT:
                    decision = HALTED
                    halted = True
                else:
                    decision = REJECTED_INCONSISTENT
            else:
                models &= table
                accepted.append((index, formula))
                decision = ACCEPTED
        trace.append(TraceEntry(index, formula, level, decision))
    return GammaResult(accepted=tuple(accepted), trace=tuple(trace))


def infer(seq: BeliefSequence, ctx: QueryContext) -> bool:
    """True when the gamma set for this query entails the query."""
    result = build_gamma(seq, ctx)
    return entails(result.accepted_formulas, ctx.query)


def answer_query(seq: BeliefSequence, ctx: QueryContext) -> Answer:
    """Three-valued verdict; gamma is built once and probed both ways."""
    result = build_gamma(seq, ctx)
    kept = result.accepted_formulas
    if entails(kept, ctx.query):
        return Answer.YES
    if entails(kept, Not(ctx.query)):
        return Answer.NO
    return Answer.NO_INFORMATION


def saturation_level(seq: BeliefSequence, query: Formula) -> int:
    """Largest finite relevance level in the query's profile, 0 when none.

    Raising k beyond this changes nothing: every element is already in or
    permanently out.
    """
    finite = [
        level for _, level in relevance_profile(query, seq) if level != INFINITY
    ]
    return int(max(finite, default=0))


def is_consequence(seq: BeliefSequence, query: Formula) -> bool:
    """Inference at the query's saturation level: the level-free verdict."""
    return infer(seq, QueryContext(query, k=saturation_level(seq, query)))


def consequences(
    seq: BeliefSequence, k: int, lang: Iterable[str], cap: int = ENUMERATION_CAP
) -> set[Formula]:
    """Canonical queries over `lang` inferred at level k.

    Each candidate is queried at its own minimal vocabulary.
    """
    out = set()
    for formula, formula_lang in enumerate_canonical_queries(lang, cap):
        ctx = QueryContext(formula, k=k, query_language=formula_lang)
        if infer(seq, ctx):
            out.add(formula)
    return out


def sequence_to_text(seq: BeliefSequence) -> str:
    """One formula per line, oldest first, trailing newline."""
    return "".join(render(formula) + "\n" for formula in seq.formulas())


def sequence_from_text(text: str) -> BeliefSequence:
    """Inverse of `sequence_to_text`; blank lines and # comments skipped."""
    formulas = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        formulas.append(parse(stripped))
    return BeliefSequence.from_formulas(formulas)
