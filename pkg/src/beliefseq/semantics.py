"""Classical semantics over small vocabularies.

Satisfiability, entailment and equivalence are decided by truth tables. A
table is packed into an int: bit j is the formula's value under the j-th
valuation of a fixed, sorted atom tuple (first atom most significant, False
before True). Tables are exponential in the atom count, which is fine for
the vocabularies this library is built for; keep them small.

Also here: the minimal vocabulary of a formula (the atoms its truth
function actually depends on) and canonical representatives of Boolean
functions, used as deterministic query batteries elsewhere.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .formulas import (
    FALSE,
    TRUE,
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    syntactic_language,
)

Language = frozenset[str]

ENUMERATION_CAP = 4


def all_valuations(atoms: Sequence[str]) -> Iterator[dict[str, bool]]:
    """Every valuation of `atoms` in lexicographic order, False first."""
    for bits in product((False, True), repeat=len(atoms)):
        yield dict(zip(atoms, bits))


@lru_cache(maxsize=None)
def _atom_bits(count: int, position: int) -> int:
    # table of the bare atom atoms[position] over 2^count valuations
    width = 1 << (count - 1 - position)
    period_ones = (1 << (2 * width)) - 1
    repeats = ((1 << (1 << count)) - 1) // period_ones
    return repeats * (((1 << width) - 1) << width)


@lru_cache(maxsize=None)
def truth_table_bits(formula: Formula, atoms: tuple[str, ...]) -> int:
    """Packed truth table of `formula` over the valuation space of `atoms`.

    Every atom of the formula must be listed in `atoms`.
    """
    full = (1 << (1 << len(atoms))) - 1
    if isinstance(formula, Const):
        return full if formula.value else 0
    if isinstance(formula, Var):
        try:
            position = atoms.index(formula.name)
        except ValueError:
            raise ValueError(f"atom {formula.name!r} missing from basis {atoms!r}") from None
        return _atom_bits(len(atoms), position)
    if isinstance(formula, Not):
        return full ^ truth_table_bits(formula.child, atoms)
    left = truth_table_bits(formula.left, atoms)  # type: ignore[union-attr]
    right = truth_table_bits(formula.right, atoms)  # type: ignore[union-attr]
    if isinstance(formula, And):
        return left & right
    if isinstance(formula, Or):
        return left | right
    if isinstance(formula, Implies):
        return (full ^ left) | right
    if isinstance(formula, Iff):
        return full ^ (left ^ right)
    raise TypeError(f"not a formula: {formula!r}")


def basis_atoms(formulas: Iterable[Formula]) -> tuple[str, ...]:
    """Sorted union of the syntactic languages of `formulas`."""
    names: set[str] = set()
    for formula in formulas:
        names |= syntactic_language(formula)
    return tuple(sorted(names))


def is_satisfiable(formulas: Iterable[Formula]) -> bool:
    """True when some single valuation makes every formula true."""
    items = list(formulas)
    atoms = basis_atoms(items)
    table = (1 << (1 << len(atoms))) - 1
    for formula in items:
        table &= truth_table_bits(formula, atoms)
        if table == 0:
            return False
    return True


def entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    """Classical consequence: every model of the premises satisfies the conclusion."""
    items = list(premises)
    atoms = basis_atoms(items + [conclusion])
    full = (1 << (1 << len(atoms))) - 1
    table = full
    for formula in items:
        table &= truth_table_bits(formula, atoms)
    return table & (full ^ truth_table_bits(conclusion, atoms)) == 0


def equivalent(left: Formula, right: Formula) -> bool:
    """True when the two formulas have the same truth function."""
    atoms = basis_atoms([left, right])
    return truth_table_bits(left, atoms) == truth_table_bits(right, atoms)


def _substitute(formula: Formula, name: str, value: bool) -> Formula:
    if isinstance(formula, Var):
        if formula.name == name:
            return TRUE if value else FALSE
        return formula
    if isinstance(formula, Const):
        return formula
    if isinstance(formula, Not):
        return Not(_substitute(formula.child, name, value))
    left = _substitute(formula.left, name, value)  # type: ignore[union-attr]
    right = _substitute(formula.right, name, value)  # type: ignore[union-attr]
    return type(formula)(left, right)  # type: ignore[call-arg]


@lru_cache(maxsize=None)
def smallest_language(formula: Formula) -> Language:
    """Atoms the formula's truth function actually depends on.

    An atom stays exactly when fixing it true versus false yields
    inequivalent formulas. Equivalent formulas therefore share this
    language, and it is empty precisely for tautologies and contradictions.
    """
    essential = [
        name
        for name in syntactic_language(formula)
        if not equivalent(_substitute(formula, name, True), _substitute(formula, name, False))
    ]
    return frozenset(essential)


def truth_table_language(table: int, atoms: Sequence[str]) -> Language:
    """Atoms a packed truth table depends on."""
    count = len(atoms)
    essential = []
    for position, name in enumerate(atoms):
        flip = 1 << (count - 1 - position)
        for j in range(1 << count):
            if (table >> j) & 1 != (table >> (j ^ flip)) & 1:
                essential.append(name)
                break
    return frozenset(essential)


def _conjunction(parts: Sequence[Formula]) -> Formula:
    formula = parts[0]
    for part in parts[1:]:
        formula = And(formula, part)
    return formula


def _disjunction(parts: Sequence[Formula]) -> Formula:
    formula = parts[0]
    for part in parts[1:]:
        formula = Or(formula, part)
    return formula


def canonical_formula(table: int, atoms: Sequence[str]) -> Formula:
    """Deterministic representative of a packed truth table over `atoms`.

    Constants for the two constant tables, otherwise the full disjunctive
    normal form with one conjunct per satisfying valuation, in valuation
    order.
    """
    atoms = tuple(atoms)
    rows = 1 << len(atoms)
    if table == 0:
        return FALSE
    if table == (1 << rows) - 1:
        return TRUE
    terms = []
    for j in range(rows):
        if (table >> j) & 1:
            literals: list[Formula] = []
            for position, name in enumerate(atoms):
                if (j >> (len(atoms) - 1 - position)) & 1:
                    literals.append(Var(name))
                else:
                    literals.append(Not(Var(name)))
            terms.append(_conjunction(literals))
    return _disjunction(terms)


def enumerate_canonical_queries(
    lang: Iterable[str], cap: int = ENUMERATION_CAP
) -> list[tuple[Formula, Language]]:
    """One representative per Boolean function over `lang`.

    Returns 2^(2^n) pairs (formula, minimal vocabulary), ordered by
    descending truth table. Refuses vocabularies larger than `cap`: the
    listing is doubly exponential.
    """
    atoms = tuple(sorted(set(lang)))
    if len(atoms) > cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {cap}")
    rows = 1 << len(atoms)
    out = []
    for table in range((1 << rows) - 1, -1, -1):
        out.append((canonical_formula(table, atoms), truth_table_language(table, atoms)))
    return out


def canonical_query_space(
    lang: Iterable[str], cap: int = ENUMERATION_CAP
) -> list[tuple[Formula, Language]]:
    """One representative per equivalence class over `lang`, written in its
    own minimal vocabulary.

    For every subset S of `lang` (smallest first, then alphabetical, then
    descending table) this lists the functions over S that depend on all of
    S. Same size as `enumerate_canonical_queries`, prettier formulas.
    """
    atoms = tuple(sorted(set(lang)))
    if len(atoms) > cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {cap}")
    out = []
    for size in range(len(atoms) + 1):
        for subset in combinations(atoms, size):
            rows = 1 << size
            for table in range((1 << rows) - 1, -1, -1):
                if truth_table_language(table, subset) == frozenset(subset):
                    out.append((canonical_formula(table, subset), frozenset(subset)))
    return out
