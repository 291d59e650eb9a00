"""Conformance suites.

Every load-bearing behavioural claim about the engine is re-checked here
from scratch, either exhaustively or by seeded random search, and scored
holds/fails. A claim that is supposed to fail (the relatedness conditions
that direct relevance genuinely violates, the literal adjunction rule) is
reported as failing with counterexamples, never patched over; the expected
statuses live in EXPECTED_STATUS and `conformance_failures` compares a run
against them.

Reports are deterministic functions of (samples, seed). Counterexamples are
fully rendered, so each one can be replayed through the public operations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..formulas import TRUE, And, Formula, Implies, Not, Or, Var, parse, render
from ..relevance import (
    INFINITY,
    directly_relevant,
    relevance_level,
    relevant_at_level,
)
from ..semantics import (
    canonical_formula,
    canonical_query_space,
    is_satisfiable,
    smallest_language,
    truth_table_bits,
    truth_table_language,
)
from ..sequences import (
    ACCEPTED,
    HALTED,
    LIBERAL,
    REJECTED_INCONSISTENT,
    REJECTED_IRRELEVANT,
    STRICT,
    Answer,
    BeliefSequence,
    QueryContext,
    answer_query,
    build_gamma,
    infer,
    initial_segment,
    priority_order,
    saturation_level,
)
from ..equivalence import equivalent_sequences, strongly_equivalent_bounded
from .generators import (
    DEFAULT_POOL,
    equal_language_pair,
    random_formula,
    random_sequence,
    wrap_equivalent,
    weaker_same_language,
)
from .oracles import rel_oracle, smallest_language_oracle

COUNTEREXAMPLE_LIMIT = 50

LITERAL = "literal"
SHARED_LANGUAGE = "shared_language"


@dataclass
class ClaimReport:
    claim: str
    status: str  # "holds" | "fails"
    trials: int
    violations: int
    counterexamples: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "trials": self.trials,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
        }


class _Collector:
    """Accumulates trial outcomes for one claim."""

    def __init__(self, claim: str) -> None:
        self.claim = claim
        self.trials = 0
        self.violations = 0
        self.counterexamples: list[dict] = []

    def check(self, ok: bool, counterexample: Callable[[], dict]) -> None:
        self.trials += 1
        if not ok:
            self.violations += 1
            if len(self.counterexamples) < COUNTEREXAMPLE_LIMIT:
                self.counterexamples.append(counterexample())

    def report(self) -> ClaimReport:
        status = "holds" if self.violations == 0 else "fails"
        return ClaimReport(
            self.claim, status, self.trials, self.violations, self.counterexamples
        )


def _seq_lines(seq: BeliefSequence) -> list[str]:
    return [render(formula) for formula in seq.formulas()]


# ---------------------------------------------------------------------------
# Relatedness conditions for direct relevance (exhaustive over a small pool)
# ---------------------------------------------------------------------------


def epstein_report(atom_pool: Sequence[str] = ("p", "q")) -> list[ClaimReport]:
    """Exhaustive scorecard of the relatedness conditions R1-R6 and R5a.

    The pool is every canonical equivalence-class representative over
    `atom_pool`; R2 and R5 additionally range over built composites, and R4
    is also probed on the syntactic contradictions a & ~a. Direct relevance
    genuinely violates R2, R5 and unrestricted R4, so those rows are meant
    to fail.
    """
    pool = [formula for formula, _ in canonical_query_space(atom_pool)]
    reports = []

    r1 = _Collector("epstein-R1")
    r3 = _Collector("epstein-R3")
    for a in pool:
        for b in pool:
            r1.check(
                directly_relevant(a, b) == directly_relevant(Not(a), b),
                lambda a=a, b=b: {"alpha": render(a), "beta": render(b)},
            )
            r3.check(
                directly_relevant(a, b) == directly_relevant(b, a),
                lambda a=a, b=b: {"alpha": render(a), "beta": render(b)},
            )
    reports.append(r1.report())

    r2 = _Collector("epstein-R2")
    r5 = _Collector("epstein-R5")
    r5a = _Collector("epstein-R5a")
    for a in pool:
        for b in pool:
            for c in pool:
                conj = And(b, c)
                cond = Implies(b, c)
                r2.check(
                    directly_relevant(a, conj) == directly_relevant(a, cond),
                    lambda a=a, b=b, c=c: {
                        "alpha": render(a),
                        "beta": render(b),
                        "gamma": render(c),
                        "conjunction": render(And(b, c)),
                        "conditional": render(Implies(b, c)),
                    },
                )
                either = directly_relevant(a, b) or directly_relevant(a, c)
                r5.check(
                    directly_relevant(a, cond) == either,
                    lambda a=a, b=b, c=c: {
                        "alpha": render(a),
                        "beta": render(b),
                        "gamma": render(c),
                        "conditional": render(Implies(b, c)),
                    },
                )
                r5a.check(
                    (not directly_relevant(a, cond)) or either,
                    lambda a=a, b=b, c=c: {
                        "alpha": render(a),
                        "beta": render(b),
                        "gamma": render(c),
                        "conditional": render(Implies(b, c)),
                    },
                )
    reports.append(r2.report())
    reports.append(r3.report())

    contradictions = [And(Var(name), Not(Var(name))) for name in sorted(atom_pool)]
    r4 = _Collector("epstein-R4")
    r4_restricted = _Collector("epstein-R4-nonempty")
    for a in pool + contradictions:
        r4.check(directly_relevant(a, a), lambda a=a: {"alpha": render(a)})
        if smallest_language(a):
            r4_restricted.check(directly_relevant(a, a), lambda a=a: {"alpha": render(a)})
    reports.append(r4.report())
    reports.append(r4_restricted.report())
    reports.append(r5.report())
    reports.append(r5a.report())

    r6 = _Collector("epstein-R6")
    for a in pool:
        for b in pool:
            variants = [Not(Not(b)), Implies(TRUE, b)] + [
                And(b, Or(Var(name), Not(Var(name)))) for name in sorted(atom_pool)
            ]
            for variant in variants:
                r6.check(
                    directly_relevant(a, b) == directly_relevant(a, variant),
                    lambda a=a, b=b, variant=variant: {
                        "alpha": render(a),
                        "beta": render(b),
                        "beta_variant": render(variant),
                    },
                )
    reports.append(r6.report())
    return reports


# ---------------------------------------------------------------------------
# Inference rules under equal query vocabularies
# ---------------------------------------------------------------------------

_ADJUNCTION_REGRESSION = (
    ["~p", "q", "p | ~q"],  # oldest first
    "p | q",
    "p | ~q",
    0,
)


def _rules_context(query: Formula, k: int, reading: str, shared: frozenset[str]) -> QueryContext:
    if reading == SHARED_LANGUAGE:
        return QueryContext(query, k=k, query_language=shared | smallest_language(query))
    return QueryContext(query, k=k)


def inference_rules_report(
    samples: int,
    seed: int,
    reading: str = LITERAL,
    pool: Sequence[str] = DEFAULT_POOL,
) -> list[ClaimReport]:
    """Randomized scorecard of the six inference rules for equal-vocabulary
    queries: weak inclusion, cautious and rational monotonicity, weak cut,
    adjunction, right weakening.

    `reading` picks how the adjunction conjunction is scoped: "literal"
    queries it at its own minimal vocabulary (expected to fail, with a
    pinned regression instance as trial zero), "shared_language" widens the
    query language to the operands' vocabulary (expected to hold).
    """
    if reading not in (LITERAL, SHARED_LANGUAGE):
        raise ValueError(f"unknown reading {reading!r}")
    rng = random.Random(seed)
    weak_inclusion = _Collector(f"rules-weak-inclusion-{reading}")
    cautious = _Collector(f"rules-cautious-monotonicity-{reading}")
    rational = _Collector(f"rules-rational-monotonicity-{reading}")
    weak_cut = _Collector(f"rules-weak-cut-{reading}")
    adjunction = _Collector(f"rules-adjunction-{reading}")
    weakening = _Collector(f"rules-right-weakening-{reading}")

    def run_trial(
        seq: BeliefSequence, alpha: Formula, beta: Formula, k: int, weaker: Formula | None
    ) -> None:
        shared = smallest_language(alpha) | smallest_language(beta)
        ctx = lambda query: _rules_context(query, k, reading, shared)  # noqa: E731
        instance = lambda extra: {  # noqa: E731
            "sequence": _seq_lines(seq),
            "alpha": render(alpha),
            "beta": render(beta),
            "k": k,
            "mode": LIBERAL,
            "reading": reading,
            **extra,
        }

        if is_satisfiable([alpha]):
            weak_inclusion.check(
                answer_query(seq.revise(alpha), ctx(alpha)) == Answer.YES,
                lambda: instance({"rule": "weak-inclusion"}),
            )

        alpha_in = infer(seq, ctx(alpha))
        beta_in = infer(seq, ctx(beta))
        if alpha_in and beta_in:
            cautious.check(
                infer(seq.revise(alpha), ctx(beta)),
                lambda: instance({"rule": "cautious-monotonicity"}),
            )
            conj = And(alpha, beta)
            adjunction.check(
                infer(seq, ctx(conj)),
                lambda: instance({"rule": "adjunction", "conjunction": render(conj)}),
            )
        if beta_in and not infer(seq, ctx(Not(alpha))):
            rational.check(
                infer(seq.revise(alpha), ctx(beta)),
                lambda: instance({"rule": "rational-monotonicity"}),
            )
        if alpha_in and infer(seq.revise(alpha), ctx(beta)):
            weak_cut.check(
                infer(seq, ctx(beta)),
                lambda: instance({"rule": "weak-cut"}),
            )
        if weaker is not None and alpha_in:
            weakening.check(
                infer(seq, ctx(weaker)),
                lambda: instance({"rule": "right-weakening", "weaker": render(weaker)}),
            )

    if samples >= 1:
        lines, alpha_text, beta_text, k0 = _ADJUNCTION_REGRESSION
        seq0 = BeliefSequence.from_formulas(parse(line) for line in lines)
        alpha0, beta0 = parse(alpha_text), parse(beta_text)
        atoms0 = tuple(sorted(smallest_language(alpha0)))
        weaker0 = weaker_same_language(
            random.Random(0), truth_table_bits(alpha0, atoms0), atoms0
        )
        run_trial(seq0, alpha0, beta0, k0, weaker0)

    for _ in range(max(0, samples - 1)):
        seq = random_sequence(rng, pool, 6)
        alpha, beta = equal_language_pair(rng, pool)
        k = rng.randint(0, 2)
        atoms = tuple(sorted(smallest_language(alpha)))
        weaker = weaker_same_language(rng, truth_table_bits(alpha, atoms), atoms)
        run_trial(seq, alpha, beta, k, weaker)

    return [
        weak_inclusion.report(),
        cautious.report(),
        rational.report(),
        weak_cut.report(),
        adjunction.report(),
        weakening.report(),
    ]


# ---------------------------------------------------------------------------
# Structural invariants of ranking, gamma construction and revision
# ---------------------------------------------------------------------------


@dataclass
class _Instance:
    seq: BeliefSequence
    query: Formula
    delta: Formula
    k: int
    mode: str
    wrapped_query: Formula
    wrapped_seq: BeliefSequence
    context_subset: list[Formula]
    irrelevant_delta: Formula
    pair: tuple[Formula, Formula]
    same_language_query: Formula | None
    subject_atoms: tuple[str, ...]


def _draw_instance(rng: random.Random, pool: Sequence[str]) -> _Instance:
    seq = random_sequence(rng, pool, 6)
    query = random_formula(rng, pool)
    delta = random_formula(rng, pool)
    k = rng.randint(0, 2)
    mode = rng.choice((LIBERAL, LIBERAL, STRICT))
    wrapped_query = wrap_equivalent(rng, query, pool)
    formulas = seq.formulas()
    if formulas:
        target = rng.randrange(len(formulas))
        formulas = list(formulas)
        formulas[target] = wrap_equivalent(rng, formulas[target], pool)
    wrapped_seq = BeliefSequence.from_formulas(formulas)
    distinct = list(dict.fromkeys(seq.formulas()))
    context_subset = [f for f in distinct if rng.random() < 0.6]
    # disjoint reserved atoms guarantee no vocabulary path back to the pool
    irrelevant_delta = random_formula(rng, ("x", "y"), allow_constants=False)
    pair = equal_language_pair(rng, pool)
    lang = smallest_language(query)
    same_language_query: Formula | None = None
    if lang:
        atoms = tuple(sorted(lang))
        for _ in range(20):
            table = rng.randrange(1 << (1 << len(atoms)))
            if truth_table_language(table, atoms) == frozenset(atoms):
                same_language_query = canonical_formula(table, atoms)
                break
    subject_size = rng.randint(0, min(2, len(pool)))
    subject_atoms = tuple(sorted(rng.sample(list(pool), subject_size)))
    return _Instance(
        seq=seq,
        query=query,
        delta=delta,
        k=k,
        mode=mode,
        wrapped_query=wrapped_query,
        wrapped_seq=wrapped_seq,
        context_subset=context_subset,
        irrelevant_delta=irrelevant_delta,
        pair=pair,
        same_language_query=same_language_query,
        subject_atoms=subject_atoms,
    )


def structural_report(
    samples: int, seed: int, pool: Sequence[str] = DEFAULT_POOL
) -> list[ClaimReport]:
    """Randomized plus fixed-battery scorecard of the engine's structural
    guarantees: relevance algebra, oracle agreement, gamma construction,
    level monotonicity, syntax independence and the revision laws.
    """
    rng = random.Random(seed)
    instances = [_draw_instance(rng, pool) for _ in range(samples)]

    symmetry = _Collector("relevance-symmetry")
    k_monotone = _Collector("relevance-k-monotone")
    antimonotone = _Collector("relevance-context-antimonotone")
    reflexivity_nonempty = _Collector("relevance-reflexivity-nonempty")
    reflexivity_unrestricted = _Collector("relevance-reflexivity-unrestricted")
    semantic_invariance = _Collector("relevance-semantic-invariance")
    zero_iff_direct = _Collector("relevance-zero-iff-direct")
    oracle_rel = _Collector("oracle-relevance-level")
    oracle_vocab = _Collector("oracle-minimal-vocabulary")
    consistency = _Collector("gamma-consistency")
    relevance_bound = _Collector("gamma-relevance-bound")
    maximality = _Collector("gamma-maximality")
    gamma_monotone = _Collector("gamma-k-monotone")
    verdict_monotone = _Collector("verdict-k-monotone")
    language_determinism = _Collector("gamma-language-determinism")
    syntax_invariance = _Collector("answer-syntax-invariance")
    subject_matter = _Collector("subject-matter-consistency")
    stability = _Collector("irrelevant-revision-stability")
    revision_append = _Collector("revision-is-append")
    revision_success = _Collector("revision-success")
    revision_invariance = _Collector("revision-syntax-invariance")
    strict_prefix = _Collector("strict-prefix-of-liberal")
    extension_lemma = _Collector("gamma-extension-lemma")

    # fixed counterexample: empty-vocabulary formulas are not self-relevant
    contradiction = parse("p & ~p")
    reflexivity_unrestricted.check(
        relevance_level(contradiction, contradiction, []) == 0,
        lambda: {"formula": render(contradiction), "context": []},
    )

    for inst in instances:
        seq = inst.seq
        ctx_set = list(seq.formula_set())
        base = lambda extra: {  # noqa: E731
            "sequence": _seq_lines(seq),
            "query": render(inst.query),
            "k": inst.k,
            "mode": inst.mode,
            **extra,
        }

        level = relevance_level(inst.query, inst.delta, ctx_set)
        symmetry.check(
            relevance_level(inst.delta, inst.query, ctx_set) == level,
            lambda: base({"delta": render(inst.delta), "level": str(level)}),
        )
        if level != INFINITY:
            ok = all(
                relevant_at_level(inst.query, inst.delta, ctx_set, j) == (j >= level)
                for j in range(int(level) + 3)
            )
            k_monotone.check(ok, lambda: base({"delta": render(inst.delta), "level": str(level)}))
        narrowed = relevance_level(inst.query, inst.delta, inst.context_subset)
        antimonotone.check(
            level <= narrowed,
            lambda: base(
                {
                    "delta": render(inst.delta),
                    "subset": [render(f) for f in inst.context_subset],
                    "full_level": str(level),
                    "subset_level": str(narrowed),
                }
            ),
        )
        if smallest_language(inst.query):
            reflexivity_nonempty.check(
                relevance_level(inst.query, inst.query, ctx_set) == 0,
                lambda: base({}),
            )
        reflexivity_unrestricted.check(
            relevance_level(inst.query, inst.query, ctx_set) == 0,
            lambda: base({}),
        )
        semantic_invariance.check(
            relevance_level(inst.wrapped_query, inst.delta, ctx_set) == level
            and relevance_level(inst.query, inst.delta, inst.wrapped_seq.formula_set())
            == relevance_level(inst.query, inst.delta, seq.formula_set()),
            lambda: base({"delta": render(inst.delta)}),
        )
        zero_iff_direct.check(
            (level == 0) == directly_relevant(inst.query, inst.delta),
            lambda: base({"delta": render(inst.delta), "level": str(level)}),
        )

        oracle_ctx = list(dict.fromkeys(seq.formulas()))[:4]
        oracle_rel.check(
            relevance_level(inst.query, inst.delta, oracle_ctx)
            == rel_oracle(inst.query, inst.delta, oracle_ctx),
            lambda: base(
                {"delta": render(inst.delta), "context": [render(f) for f in oracle_ctx]}
            ),
        )
        oracle_vocab.check(
            smallest_language(inst.query) == smallest_language_oracle(inst.query),
            lambda: base({}),
        )

        ctx = QueryContext(inst.query, k=inst.k, mode=inst.mode)
        result = build_gamma(seq, ctx)
        kept = result.accepted_formulas
        ans = answer_query(seq, ctx)
        neg_ans = answer_query(seq, QueryContext(Not(inst.query), k=inst.k, mode=inst.mode))
        consistency.check(
            is_satisfiable(kept) and not (ans == Answer.YES and neg_ans == Answer.YES),
            lambda: base({"accepted": [render(f) for f in kept]}),
        )

        trace_indices = sorted(entry.index for entry in result.trace)
        seq_indices = sorted(index for index, _ in seq)
        bound_ok = (
            trace_indices == seq_indices
            and all(
                entry.level <= inst.k
                for entry in result.trace
                if entry.decision in (ACCEPTED, REJECTED_INCONSISTENT)
            )
            and all(
                entry.level > inst.k
                for entry in result.trace
                if entry.decision == REJECTED_IRRELEVANT
            )
        )
        relevance_bound.check(bound_ok, lambda: base({}))

        liberal_result = (
            result
            if inst.mode == LIBERAL
            else build_gamma(seq, QueryContext(inst.query, k=inst.k, mode=LIBERAL))
        )
        rejected = [
            entry.formula
            for entry in liberal_result.trace
            if entry.decision == REJECTED_INCONSISTENT
        ]
        maximality.check(
            all(
                not is_satisfiable(liberal_result.accepted_formulas + [formula])
                for formula in rejected
            ),
            lambda: base({"accepted": [render(f) for f in liberal_result.accepted_formulas]}),
        )

        wider = build_gamma(seq, QueryContext(inst.query, k=inst.k + 1, mode=inst.mode))
        gamma_monotone.check(
            result.accepted_set() <= wider.accepted_set(),
            lambda: base({}),
        )

        answers = [
            answer_query(seq, QueryContext(inst.query, k=j, mode=inst.mode))
            for j in range(saturation_level(seq, inst.query) + 2)
        ]
        settled: Answer | None = None
        flips = False
        for verdict in answers:
            if settled in (Answer.YES, Answer.NO) and verdict != settled:
                flips = True
            if verdict in (Answer.YES, Answer.NO):
                settled = verdict
        verdict_monotone.check(
            not flips, lambda: base({"answers": [a.value for a in answers]})
        )

        if inst.same_language_query is not None:
            twin = build_gamma(
                seq, QueryContext(inst.same_language_query, k=inst.k, mode=inst.mode)
            )
            language_determinism.check(
                twin.accepted == result.accepted,
                lambda: base({"twin_query": render(inst.same_language_query)}),
            )

        syntax_invariance.check(
            answer_query(
                inst.wrapped_seq, QueryContext(inst.wrapped_query, k=inst.k, mode=inst.mode)
            )
            == ans,
            lambda: base(
                {
                    "wrapped_sequence": _seq_lines(inst.wrapped_seq),
                    "wrapped_query": render(inst.wrapped_query),
                }
            ),
        )

        if inst.subject_atoms:
            subject = frozenset(inst.subject_atoms)
            yes_set = [
                formula
                for formula, lang in canonical_query_space(inst.subject_atoms)
                if lang == subject
                and infer(seq, QueryContext(formula, k=inst.k, query_language=lang))
            ]
            subject_matter.check(
                is_satisfiable(yes_set),
                lambda: base(
                    {
                        "subject": sorted(subject),
                        "yes_set": [render(f) for f in yes_set],
                    }
                ),
            )

        revised = seq.revise(inst.irrelevant_delta)
        stability.check(
            relevance_level(inst.query, inst.irrelevant_delta, revised.formula_set())
            == INFINITY
            and answer_query(revised, ctx) == ans,
            lambda: base({"delta": render(inst.irrelevant_delta)}),
        )

        appended = seq.revise(inst.delta)
        revision_append.check(
            appended.formulas() == seq.formulas() + [inst.delta]
            and initial_segment(seq, appended)
            and all(b > a for (a, _), (b, _) in zip(appended, list(appended)[1:])),
            lambda: base({"delta": render(inst.delta)}),
        )
        if is_satisfiable([inst.query]):
            revision_success.check(
                answer_query(seq.revise(inst.query), ctx) == Answer.YES,
                lambda: base({}),
            )
        revision_invariance.check(
            infer(seq.revise(inst.query), ctx)
            == infer(seq.revise(inst.wrapped_query), ctx),
            lambda: base({"wrapped_query": render(inst.wrapped_query)}),
        )

        strict_result = build_gamma(seq, QueryContext(inst.query, k=inst.k, mode=STRICT))
        liberal_accepted = liberal_result.accepted
        strict_prefix.check(
            strict_result.accepted == liberal_accepted[: len(strict_result.accepted)],
            lambda: base({}),
        )

        alpha, beta = inst.pair
        beta_ctx = QueryContext(beta, k=inst.k)
        base_gamma = build_gamma(seq, beta_ctx)
        if is_satisfiable(base_gamma.accepted_formulas + [alpha]):
            extended = build_gamma(seq.revise(alpha), beta_ctx)
            extension_lemma.check(
                extended.accepted_set() == base_gamma.accepted_set() | {alpha},
                lambda: base(
                    {
                        "alpha": render(alpha),
                        "beta": render(beta),
                        "base_accepted": [render(f) for f in base_gamma.accepted_formulas],
                        "extended_accepted": [
                            render(f) for f in extended.accepted_formulas
                        ],
                    }
                ),
            )

    reports = [
        symmetry.report(),
        k_monotone.report(),
        antimonotone.report(),
        reflexivity_nonempty.report(),
        reflexivity_unrestricted.report(),
        semantic_invariance.report(),
        zero_iff_direct.report(),
        oracle_rel.report(),
        oracle_vocab.report(),
        consistency.report(),
        relevance_bound.report(),
        maximality.report(),
        gamma_monotone.report(),
        verdict_monotone.report(),
        language_determinism.report(),
        syntax_invariance.report(),
        subject_matter.report(),
        stability.report(),
        revision_append.report(),
        revision_success.report(),
        revision_invariance.report(),
        strict_prefix.report(),
        extension_lemma.report(),
        _worked_examples_report(),
    ]
    return reports


# ---------------------------------------------------------------------------
# Fixed worked-example battery
# ---------------------------------------------------------------------------


def _seq(*lines: str) -> BeliefSequence:
    return BeliefSequence.from_formulas(parse(line) for line in lines)


def worked_example_checks() -> list[tuple[str, bool, str]]:
    """The pinned end-to-end battery: (label, passed, detail) triples.

    These are the concrete episodes the engine must reproduce exactly:
    overriding, undermining, split subjects, suspension after conflicting
    news, non-monotone revision, and the equivalence pair separated only by
    revision.
    """
    checks: list[tuple[str, bool, str]] = []

    def add(label: str, passed: bool, detail: str) -> None:
        checks.append((label, passed, detail))

    # restored belief: the disjunction revives p against an intervening denial
    seq = _seq("p", "~p & ~q", "p | q")
    ctx = QueryContext(parse("p"), k=0)
    result = build_gamma(seq, ctx)
    ans = answer_query(seq, ctx)
    decisions = {entry.index: entry.decision for entry in result.trace}
    add(
        "restored-belief-gamma",
        result.accepted == ((2, parse("p | q")), (0, parse("p")))
        and decisions == {2: ACCEPTED, 1: REJECTED_INCONSISTENT, 0: ACCEPTED}
        and ans == Answer.YES,
        f"answer={ans.value} accepted={[render(f) for f in result.accepted_formulas]}",
    )
    order = priority_order(seq, ctx)
    add(
        "restored-belief-ranking",
        order
        == [
            (2, parse("p | q"), 0),
            (1, parse("~p & ~q"), 0),
            (0, parse("p"), 0),
        ],
        f"order={[(i, render(f), lvl) for i, f, lvl in order]}",
    )
    strict_result = build_gamma(seq, QueryContext(parse("p"), k=0, mode=STRICT))
    strict_decisions = {entry.index: entry.decision for entry in strict_result.trace}
    add(
        "restored-belief-strict-halt",
        strict_result.accepted == ((2, parse("p | q")),)
        and strict_decisions == {2: ACCEPTED, 1: HALTED, 0: HALTED},
        f"accepted={[render(f) for f in strict_result.accepted_formulas]}",
    )

    # two subjects: q-talk never drags r-talk in at level 0
    seq = _seq("p & q", "r & ~q")
    ans_p = answer_query(seq, QueryContext(parse("p"), k=1))
    ans_r = answer_query(seq, QueryContext(parse("r"), k=0))
    add(
        "two-subjects",
        ans_p == Answer.YES and ans_r == Answer.YES,
        f"p@k1={ans_p.value} r@k0={ans_r.value}",
    )

    # undermining: newer blanket denial wins at every level
    seq = _seq("p", "~(p | q)")
    sat = saturation_level(seq, parse("p"))
    answers = [answer_query(seq, QueryContext(parse("p"), k=j)) for j in range(sat + 1)]
    add(
        "undermined-belief",
        all(a == Answer.NO for a in answers),
        f"answers={[a.value for a in answers]} saturation={sat}",
    )

    # conflicting news suspends judgement instead of picking a side
    seq = _seq("p & q").revise(parse("~p | ~q"))
    ans_p = answer_query(seq, QueryContext(parse("p"), k=0))
    ans_np = answer_query(seq, QueryContext(parse("~p"), k=0))
    add(
        "suspended-judgement",
        ans_p == Answer.NO_INFORMATION and ans_np == Answer.NO_INFORMATION,
        f"p={ans_p.value} ~p={ans_np.value}",
    )

    # non-monotone: a conjunction the sequence supports can defeat an old verdict
    seq = _seq("p", "~p & ~q", "q")
    conj_answers = [answer_query(seq, QueryContext(parse("p & q"), k=j)) for j in (0, 1)]
    neg_answers = [answer_query(seq, QueryContext(parse("~p"), k=j)) for j in (0, 1)]
    revised = seq.revise(parse("p & q"))
    sat = saturation_level(revised, parse("~p"))
    after = [answer_query(revised, QueryContext(parse("~p"), k=j)) for j in range(sat + 1)]
    add(
        "non-monotone-revision",
        all(a == Answer.YES for a in conj_answers)
        and all(a == Answer.YES for a in neg_answers)
        and all(a != Answer.YES for a in after),
        f"conj={[a.value for a in conj_answers]} neg={[a.value for a in neg_answers]}"
        f" after={[a.value for a in after]}",
    )

    # revision never rewrites history
    seq = _seq("p", "q", "p & q", "~r")
    revised = seq.revise(parse("~p"))
    add(
        "revision-appends-verbatim",
        revised.formulas() == [parse(t) for t in ("p", "q", "p & q", "~r", "~p")]
        and [i for i, _ in revised] == [0, 1, 2, 3, 4],
        f"revised={[render(f) for f in revised.formulas()]}",
    )

    # equal answers today, separable by tomorrow's revision
    a = _seq("~p & ~q")
    b = _seq("p", "~p & ~q")
    plain = equivalent_sequences(a, b)
    strong = strongly_equivalent_bounded(a, b, depth=1)
    separator = parse("p | q")
    separated = equivalent_sequences(a.revise(separator), b.revise(separator))
    witness_ok = True
    if strong.witness is not None:
        ra, rb = a, b
        for formula in strong.witness.revisions:
            ra, rb = ra.revise(formula), rb.revise(formula)
        wctx = QueryContext(strong.witness.query, k=strong.witness.k)
        witness_ok = answer_query(ra, wctx) != answer_query(rb, wctx)
    add(
        "equivalence-separated-by-revision",
        plain.result
        and not strong.result
        and strong.searched_depth == 1
        and not separated.result
        and witness_ok,
        f"plain={plain.result} strong={strong.result}"
        f" witness={strong.witness.describe() if strong.witness else None}",
    )

    return checks


def _worked_examples_report() -> ClaimReport:
    checks = worked_example_checks()
    failures = [
        {"case": label, "detail": detail} for label, passed, detail in checks if not passed
    ]
    return ClaimReport(
        "worked-examples",
        "holds" if not failures else "fails",
        trials=len(checks),
        violations=len(failures),
        counterexamples=failures,
    )


# ---------------------------------------------------------------------------
# Aggregation and conformance
# ---------------------------------------------------------------------------

EXPECTED_STATUS: dict[str, str] = {
    "epstein-R1": "holds",
    "epstein-R2": "fails",
    "epstein-R3": "holds",
    "epstein-R4": "fails",
    "epstein-R4-nonempty": "holds",
    "epstein-R5": "fails",
    "epstein-R5a": "holds",
    "epstein-R6": "holds",
    "rules-weak-inclusion-literal": "holds",
    "rules-cautious-monotonicity-literal": "holds",
    "rules-rational-monotonicity-literal": "holds",
    "rules-weak-cut-literal": "holds",
    "rules-adjunction-literal": "fails",
    "rules-right-weakening-literal": "holds",
    "rules-weak-inclusion-shared_language": "holds",
    "rules-cautious-monotonicity-shared_language": "holds",
    "rules-rational-monotonicity-shared_language": "holds",
    "rules-weak-cut-shared_language": "holds",
    "rules-adjunction-shared_language": "holds",
    "rules-right-weakening-shared_language": "holds",
    "relevance-symmetry": "holds",
    "relevance-k-monotone": "holds",
    "relevance-context-antimonotone": "holds",
    "relevance-reflexivity-nonempty": "holds",
    "relevance-reflexivity-unrestricted": "fails",
    "relevance-semantic-invariance": "holds",
    "relevance-zero-iff-direct": "holds",
    "oracle-relevance-level": "holds",
    "oracle-minimal-vocabulary": "holds",
    "gamma-consistency": "holds",
    "gamma-relevance-bound": "holds",
    "gamma-maximality": "holds",
    "gamma-k-monotone": "holds",
    "verdict-k-monotone": "holds",
    "gamma-language-determinism": "holds",
    "answer-syntax-invariance": "holds",
    "subject-matter-consistency": "holds",
    "irrelevant-revision-stability": "holds",
    "revision-is-append": "holds",
    "revision-success": "holds",
    "revision-syntax-invariance": "holds",
    "strict-prefix-of-liberal": "holds",
    "gamma-extension-lemma": "holds",
    "worked-examples": "holds",
}


def run_all_reports(
    samples: int, seed: int, pool: Sequence[str] = DEFAULT_POOL
) -> list[ClaimReport]:
    reports = list(epstein_report())
    reports += inference_rules_report(samples, seed, LITERAL, pool)
    reports += inference_rules_report(samples, seed, SHARED_LANGUAGE, pool)
    reports += structural_report(samples, seed, pool)
    return reports


def conformance_failures(reports: Iterable[ClaimReport]) -> list[str]:
    """Mismatches between a run and the expected scorecard. Empty means pass.

    Zero-trial rows are vacuous: a claim that was never exercised offers no
    evidence either way, so it cannot contradict the scorecard.
    """
    problems = []
    seen = set()
    for report in reports:
        seen.add(report.claim)
        expected = EXPECTED_STATUS.get(report.claim)
        if expected is None:
            problems.append(f"{report.claim}: unexpected claim id")
        elif report.trials > 0 and report.status != expected:
            problems.append(f"{report.claim}: {report.status}, expected {expected}")
    for claim in sorted(EXPECTED_STATUS):
        if claim not in seen:
            problems.append(f"{claim}: missing from run")
    return problems


def render_table(reports: Iterable[ClaimReport]) -> str:
    """Human-readable scorecard with expectation markers."""
    lines = [f"{'claim':<42} {'status':<7} {'expected':<9} {'trials':>7} {'bad':>5}"]
    lines.append("-" * len(lines[0]))
    for report in reports:
        expected = EXPECTED_STATUS.get(report.claim, "?")
        vacuous = report.trials == 0
        marker = "" if report.status == expected or vacuous else "  <-- MISMATCH"
        lines.append(
            f"{report.claim:<42} {report.status:<7} {expected:<9}"
            f" {report.trials:>7} {report.violations:>5}{marker}"
        )
    return "\n".join(lines)
