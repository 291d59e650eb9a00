"""Seeded random instances for the conformance suites.

Every generator takes an explicit random.Random, so a suite is a pure
function of (samples, seed). Formulas are drawn as random truth tables over
a sampled vocabulary, realised in canonical form, then sometimes wrapped
with semantics-preserving noise (double negation, redundant atoms) so that
syntactic and minimal vocabularies really differ.
"""

from __future__ import annotations

import random
from typing import Sequence

from ..formulas import FALSE, TRUE, And, Formula, Iff, Implies, Not, Or, Var
from ..semantics import canonical_formula, truth_table_language
from ..sequences import BeliefSequence

DEFAULT_POOL = ("p", "q", "r")


def wrap_equivalent(rng: random.Random, formula: Formula, pool: Sequence[str]) -> Formula:
    """A syntactically different formula with the same truth function."""
    choice = rng.randrange(4)
    if choice == 0:
        return Not(Not(formula))
    if choice == 1:
        return Implies(TRUE, formula)
    name = rng.choice(list(pool))
    if choice == 2:
        return And(formula, Or(Var(name), Not(Var(name))))
    return Or(formula, And(Var(name), Not(Var(name))))


def random_formula(
    rng: random.Random,
    pool: Sequence[str] = DEFAULT_POOL,
    *,
    allow_constants: bool = True,
    wrap_chance: float = 0.3,
) -> Formula:
    """Random formula over a random sub-vocabulary of `pool`."""
    size = rng.randint(0 if allow_constants else 1, min(3, len(pool)))
    atoms = tuple(sorted(rng.sample(list(pool), size)))
    lowest = 0 if allow_constants else 1
    table = rng.randrange(lowest, 1 << (1 << len(atoms)))
    if not allow_constants and table == (1 << (1 << len(atoms))) - 1 and atoms:
        table -= 1
    formula = canonical_formula(table, atoms)
    if rng.random() < wrap_chance:
        formula = wrap_equivalent(rng, formula, pool)
    return formula


def random_sequence(
    rng: random.Random,
    pool: Sequence[str] = DEFAULT_POOL,
    max_len: int = 6,
    *,
    wrap_chance: float = 0.3,
) -> BeliefSequence:
    length = rng.randint(0, max_len)
    return BeliefSequence.from_formulas(
        random_formula(rng, pool, wrap_chance=wrap_chance) for _ in range(length)
    )


def _essential_table(rng: random.Random, atoms: Sequence[str]) -> int:
    # a truth table depending on every atom; dense enough that a few draws land
    while True:
        table = rng.randrange(1 << (1 << len(atoms)))
        if truth_table_language(table, atoms) == frozenset(atoms):
            return table


def equal_language_pair(
    rng: random.Random, pool: Sequence[str] = DEFAULT_POOL, *, wrap_chance: float = 0.3
) -> tuple[Formula, Formula]:
    """Two formulas with the same nonempty minimal vocabulary."""
    size = rng.randint(1, min(3, len(pool)))
    atoms = tuple(sorted(rng.sample(list(pool), size)))
    left = canonical_formula(_essential_table(rng, atoms), atoms)
    right = canonical_formula(_essential_table(rng, atoms), atoms)
    if rng.random() < wrap_chance:
        left = wrap_equivalent(rng, left, atoms)
    if rng.random() < wrap_chance:
        right = wrap_equivalent(rng, right, atoms)
    return left, right


def weaker_same_language(
    rng: random.Random, formula_table: int, atoms: Sequence[str], tries: int = 40
) -> Formula | None:
    """A formula entailed by the given table, over the same full vocabulary.

    None when the draw budget runs out (possible for very tight tables).
    """
    full = (1 << (1 << len(atoms))) - 1
    for _ in range(tries):
        wider = formula_table | rng.randrange(full + 1)
        if truth_table_language(wider, atoms) == frozenset(atoms):
            return canonical_formula(wider, atoms)
    return None
