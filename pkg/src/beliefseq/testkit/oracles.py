"""Brute-force reference implementations.

These recompute what the engine computes, by the dumbest correct method
available, sharing as little machinery as possible: truth tables built with
`evaluate` row by row, minimality by subset enumeration, chain search by
enumerating every interior tuple. Slow on purpose; keep inputs tiny.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Sequence

from ..formulas import Formula, evaluate, syntactic_language
from ..relevance import INFINITY, RelLevel
from ..semantics import Language, all_valuations

ORACLE_ATOM_CAP = 4
ORACLE_CONTEXT_CAP = 6


def _expressible_over(formula: Formula, atoms: Sequence[str], subset: Sequence[str]) -> bool:
    # true when the truth table is constant across atoms outside `subset`
    seen: dict[tuple[bool, ...], bool] = {}
    for valuation in all_valuations(atoms):
        key = tuple(valuation[name] for name in subset)
        value = evaluate(formula, valuation)
        if seen.setdefault(key, value) != value:
            return False
    return True


def smallest_language_oracle(formula: Formula, cap: int = ORACLE_ATOM_CAP) -> Language:
    """Minimal vocabulary by exhaustive subset search, smallest subsets first."""
    atoms = tuple(sorted(syntactic_language(formula)))
    if len(atoms) > cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {cap}")
    for size in range(len(atoms) + 1):
        for subset in combinations(atoms, size):
            if _expressible_over(formula, atoms, subset):
                return frozenset(subset)
    raise AssertionError("unreachable: the full atom set always works")


def rel_oracle(
    a: Formula,
    b: Formula,
    context: Iterable[Formula],
    cap: int = ORACLE_CONTEXT_CAP,
) -> RelLevel:
    """Least chain length by enumerating every interior tuple from the context.

    Chains longer than the number of distinct context formulas cannot be
    minimal, so the search stops there.
    """
    items = list(dict.fromkeys(context))
    if len(items) > cap:
        raise ValueError(f"cap exceeded: {len(items)} context formulas, cap {cap}")

    languages: dict[Formula, Language] = {}

    def lang_of(formula: Formula) -> Language:
        if formula not in languages:
            languages[formula] = smallest_language_oracle(formula)
        return languages[formula]

    def adjacent(left: Formula, right: Formula) -> bool:
        return bool(lang_of(left) & lang_of(right))

    if adjacent(a, b):
        return 0
    for k in range(1, len(items) + 1):
        for chain in product(items, repeat=k):
            if not adjacent(a, chain[0]):
                continue
            if not adjacent(chain[-1], b):
                continue
            if all(adjacent(chain[i], chain[i + 1]) for i in range(k - 1)):
                return k
    return INFINITY
