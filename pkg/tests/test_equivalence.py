import random

import pytest

from beliefseq.equivalence import (
    equivalent_sequences,
    strongly_equivalent_bounded,
    subsumes,
)
from beliefseq.formulas import parse
from beliefseq.sequences import (
    Answer,
    BeliefSequence,
    QueryContext,
    answer_query,
)
from beliefseq.testkit.generators import random_sequence, wrap_equivalent


def seq(*lines):
    return BeliefSequence.from_formulas(parse(line) for line in lines)


def replay(witness, a, b):
    for formula in witness.revisions:
        a, b = a.revise(formula), b.revise(formula)
    ctx = QueryContext(witness.query, k=witness.k)
    return answer_query(a, ctx), answer_query(b, ctx)


def test_pair_battery_plain_equivalent():
    a, b = seq("~p & ~q"), seq("p", "~p & ~q")
    verdict = equivalent_sequences(a, b)
    assert verdict.result is True
    assert verdict.witness is None


def test_pair_battery_not_strongly_equivalent():
    a, b = seq("~p & ~q"), seq("p", "~p & ~q")
    verdict = strongly_equivalent_bounded(a, b, depth=1)
    assert verdict.result is False
    assert verdict.searched_depth == 1
    assert len(verdict.witness.revisions) == 1
    left, right = replay(verdict.witness, a, b)
    assert left != right


def test_pair_battery_separated_by_disjunction():
    # revising with p | q makes the sequences answer p differently
    a, b = seq("~p & ~q"), seq("p", "~p & ~q")
    separator = parse("p | q")
    after = equivalent_sequences(a.revise(separator), b.revise(separator))
    assert after.result is False
    ra, rb = a.revise(separator), b.revise(separator)
    ctx = QueryContext(parse("p"), k=0)
    assert answer_query(ra, ctx) == Answer.NO_INFORMATION
    assert answer_query(rb, ctx) == Answer.YES


def test_plain_inequivalent_with_witness():
    verdict = equivalent_sequences(seq("p"), seq("q"))
    assert verdict.result is False
    left, right = replay(verdict.witness, seq("p"), seq("q"))
    assert left != right


def test_equivalence_is_syntax_blind():
    rng = random.Random(21)
    for _ in range(30):
        s = random_sequence(rng, ("p", "q"), 4)
        wrapped = BeliefSequence.from_formulas(
            wrap_equivalent(rng, f, ("p", "q")) for f in s.formulas()
        )
        assert equivalent_sequences(s, wrapped).result is True


def test_reordered_same_level_sequences_can_differ():
    verdict = equivalent_sequences(seq("p", "~p"), seq("~p", "p"))
    assert verdict.result is False


def test_empty_sequences_equivalent():
    verdict = equivalent_sequences(BeliefSequence(), BeliefSequence())
    assert verdict.result is True
    strong = strongly_equivalent_bounded(BeliefSequence(), BeliefSequence(), depth=1)
    assert strong.result is True
    assert strong.searched_depth == 1


def test_self_equivalence_strong():
    s = seq("p", "q & r")
    assert strongly_equivalent_bounded(s, s, depth=1).result is True


def test_witness_to_depth_two():
    a, b = seq("~p & ~q"), seq("p", "~p & ~q")
    verdict = strongly_equivalent_bounded(a, b, depth=2)
    assert verdict.result is False
    # a depth-1 separation exists, so the search never needs length 2
    assert len(verdict.witness.revisions) == 1
    assert verdict.searched_depth == 2


def test_strong_equivalence_rejects_negative_depth():
    with pytest.raises(ValueError):
        strongly_equivalent_bounded(seq("p"), seq("p"), depth=-1)


def test_var_cap_enforced():
    a = seq("p & q", "r & s")
    b = seq("t")
    with pytest.raises(ValueError):
        equivalent_sequences(a, b, var_cap=4)


def test_subsumes():
    stronger, weaker = seq("p & q"), seq("p")
    assert subsumes(stronger, weaker) is True
    assert subsumes(weaker, stronger) is False
    assert subsumes(stronger, stronger) is True
    assert subsumes(BeliefSequence(), BeliefSequence()) is True


def test_witness_describe_readable():
    verdict = strongly_equivalent_bounded(seq("~p & ~q"), seq("p", "~p & ~q"), depth=1)
    text = verdict.witness.describe()
    assert "revise" in text and "query" in text and "k=" in text
