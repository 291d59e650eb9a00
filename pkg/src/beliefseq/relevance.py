"""Relevance between formulas, relative to a set of background beliefs.

Two formulas are directly relevant when their minimal vocabularies share an
atom. Background formulas can bridge vocabularies: a and b are connected at
level k when some k background formulas chain them together, every adjacent
link sharing an atom. The level counts the bridges, so 0 means direct
overlap. Formulas with an empty minimal vocabulary (tautologies and
contradictions) connect to nothing, themselves included, which is why
reflexivity only holds for formulas that say something.

The relation is a function of minimal vocabularies only, so syntactically
different but equivalent formulas are interchangeable everywhere here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .formulas import Formula, render
from .semantics import Language, smallest_language

INFINITY = math.inf

RelLevel = Union[int, float]


def logically_disjoint(a: Formula, b: Formula) -> bool:
    """True when the minimal vocabularies share no atom."""
    return not (smallest_language(a) & smallest_language(b))


def directly_relevant(a: Formula, b: Formula) -> bool:
    return not logically_disjoint(a, b)


def language_relevance_level(
    query_lang: Language,
    target_lang: Language,
    context_langs: Iterable[Language],
) -> RelLevel:
    """Bridge count between two vocabularies through context vocabularies.

    Breadth-first search, so the result is the least chain length; INFINITY
    when no chain exists. Empty vocabularies never link.
    """
    if query_lang & target_lang:
        return 0
    if not query_lang or not target_lang:
        return INFINITY
    langs = [lang for lang in context_langs if lang]
    frontier = {i for i, lang in enumerate(langs) if lang & query_lang}
    visited = set(frontier)
    depth = 1
    while frontier:
        if any(langs[i] & target_lang for i in frontier):
            return depth
        grown: set[int] = set()
        for i in frontier:
            for j, lang in enumerate(langs):
                if j not in visited and lang & langs[i]:
                    grown.add(j)
                    visited.add(j)
        frontier = grown
        depth += 1
    return INFINITY


def relevance_level(a: Formula, b: Formula, context: Iterable[Formula]) -> RelLevel:
    """Least number of context formulas needed to chain a to b.

    0 when the two are directly relevant, INFINITY when no chain through
    the context connects them. Symmetric in a and b, and it can only drop
    when the context grows.
    """
    context_langs = [smallest_language(f) for f in frozenset(context)]
    return language_relevance_level(smallest_language(a), smallest_language(b), context_langs)


def relevant_at_level(a: Formula, b: Formula, context: Iterable[Formula], k: int) -> bool:
    """True when a chain of at most k context formulas connects a and b."""
    return relevance_level(a, b, context) <= k


def relevance_profile(
    query: Formula, sequence: Iterable[tuple[int, Formula]]
) -> list[tuple[int, RelLevel]]:
    """Relevance level of every sequence element to the query.

    The context is the element set of the sequence itself, the element
    under measurement included.
    """
    entries = list(sequence)
    context_langs = [smallest_language(f) for f in {formula for _, formula in entries}]
    query_lang = smallest_language(query)
    return [
        (index, language_relevance_level(query_lang, smallest_language(formula), context_langs))
        for index, formula in entries
    ]


@dataclass(frozen=True)
class RelevanceGraph:
    """Vocabulary-sharing structure of a formula collection.

    Nodes are (index, formula) pairs; an edge joins two nodes whose minimal
    vocabularies intersect. Exposed for rendering and inspection; the level
    computations above do their own search.
    """

    nodes: tuple[tuple[int, Formula], ...]
    languages: tuple[Language, ...]

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[int, Formula]]) -> "RelevanceGraph":
        nodes = tuple(entries)
        languages = tuple(smallest_language(formula) for _, formula in nodes)
        return cls(nodes=nodes, languages=languages)

    def edges(self) -> list[tuple[int, int]]:
        """Pairs of node indices with overlapping vocabularies, i < j."""
        out = []
        for a in range(len(self.nodes)):
            for b in range(a + 1, len(self.nodes)):
                if self.languages[a] & self.languages[b]:
                    out.append((self.nodes[a][0], self.nodes[b][0]))
        return out

    def describe(self) -> list[str]:
        return [
            f"{index}: {render(formula)} :: {{{', '.join(sorted(lang))}}}"
            for (index, formula), lang in zip(self.nodes, self.languages)
        ]
