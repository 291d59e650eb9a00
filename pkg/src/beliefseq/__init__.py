"""beliefseq: relevance-sensitive inference over belief sequences.

A belief sequence is an ordered log of propositional formulas, newest last.
Queries are answered from a consistent working set assembled on the fly:
elements are ranked by how relevant they are to the query's subject matter
(vocabulary overlap, possibly through a chain of intermediaries) and by
recency, then folded in greedily while consistency lasts. Revision is just
appending, so nothing is ever rewritten and answers can change
non-monotonically as news arrives.
"""

from .formulas import (
    And,
    Const,
    FALSE,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    TRUE,
    Var,
    evaluate,
    parse,
    render,
    syntactic_language,
)
from .semantics import (
    ENUMERATION_CAP,
    Language,
    canonical_formula,
    canonical_query_space,
    entails,
    enumerate_canonical_queries,
    equivalent,
    is_satisfiable,
    smallest_language,
    truth_table_bits,
    truth_table_language,
)
from .relevance import (
    INFINITY,
    RelevanceGraph,
    RelLevel,
    directly_relevant,
    language_relevance_level,
    logically_disjoint,
    relevance_level,
    relevance_profile,
    relevant_at_level,
)
from .sequences import (
    ACCEPTED,
    Answer,
    BeliefSequence,
    GammaResult,
    HALTED,
    LIBERAL,
    QueryContext,
    REJECTED_INCONSISTENT,
    REJECTED_IRRELEVANT,
    STRICT,
    TraceEntry,
    answer_query,
    build_gamma,
    consequences,
    infer,
    initial_segment,
    is_consequence,
    priority_order,
    saturation_level,
    sequence_from_text,
    sequence_to_text,
)
from .equivalence import (
    EquivalenceVerdict,
    Witness,
    equivalent_sequences,
    strongly_equivalent_bounded,
    subsumes,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Const",
    "FALSE",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "ParseError",
    "TRUE",
    "Var",
    "evaluate",
    "parse",
    "render",
    "syntactic_language",
    "ENUMERATION_CAP",
    "Language",
    "canonical_formula",
    "canonical_query_space",
    "entails",
    "enumerate_canonical_queries",
    "equivalent",
    "is_satisfiable",
    "smallest_language",
    "truth_table_bits",
    "truth_table_language",
    "INFINITY",
    "RelevanceGraph",
    "RelLevel",
    "directly_relevant",
    "language_relevance_level",
    "logically_disjoint",
    "relevance_level",
    "relevance_profile",
    "relevant_at_level",
    "ACCEPTED",
    "Answer",
    "BeliefSequence",
    "GammaResult",
    "HALTED",
    "LIBERAL",
    "QueryContext",
    "REJECTED_INCONSISTENT",
    "REJECTED_IRRELEVANT",
    "STRICT",
    "TraceEntry",
    "answer_query",
    "build_gamma",
    "consequences",
    "infer",
    "initial_segment",
    "is_consequence",
    "priority_order",
    "saturation_level",
    "sequence_from_text",
    "sequence_to_text",
    "EquivalenceVerdict",
    "Witness",
    "equivalent_sequences",
    "strongly_equivalent_bounded",
    "subsumes",
    "__version__",
]
