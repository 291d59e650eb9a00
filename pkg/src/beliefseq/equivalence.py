"""Comparing belief sequences by what they answer.

Two sequences are equivalent when every canonical query over their combined
vocabulary gets the same answer from both, at every level up to the larger
saturation level for that query. Strong equivalence additionally demands
that equivalence survive revision; since revision chains are unbounded, the
check here searches chains only up to a stated depth and the verdict always
records how far it looked. Subsumption is one-sided: everything the second
sequence settles as yes, the first settles as yes too.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .formulas import Formula, render, syntactic_language
from .semantics import ENUMERATION_CAP, canonical_query_space
from .sequences import BeliefSequence, QueryContext, answer_query, is_consequence, saturation_level


@dataclass(frozen=True)
class Witness:
    """A replayable separation: revise by each formula in order, then ask."""

    query: Formula
    k: int
    revisions: tuple[Formula, ...] = ()

    def describe(self) -> str:
        parts = [f"revise {render(f)}" for f in self.revisions]
        parts.append(f"query {render(self.query)} at k={self.k}")
        return ", then ".join(parts)


@dataclass(frozen=True)
class EquivalenceVerdict:
    result: bool
    witness: Witness | None = None
    searched_depth: int | None = None


def _combined_atoms(a: BeliefSequence, b: BeliefSequence) -> set[str]:
    atoms: set[str] = set()
    for seq in (a, b):
        for _, formula in seq:
            atoms |= syntactic_language(formula)
    return atoms


def equivalent_sequences(
    a: BeliefSequence, b: BeliefSequence, var_cap: int = ENUMERATION_CAP
) -> EquivalenceVerdict:
    """Answer-for-answer comparison over the canonical query battery.

    The first disagreement, in battery order and then by level, becomes the
    witness.
    """
    atoms = _combined_atoms(a, b)
    if len(atoms) > var_cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {var_cap}")
    for formula, lang in canonical_query_space(atoms, var_cap):
        top = max(saturation_level(a, formula), saturation_level(b, formula))
        for k in range(top + 1):
            ctx = QueryContext(formula, k=k, query_language=lang)
            if answer_query(a, ctx) != answer_query(b, ctx):
                return EquivalenceVerdict(False, Witness(formula, k))
    return EquivalenceVerdict(True)


def strongly_equivalent_bounded(
    a: BeliefSequence,
    b: BeliefSequence,
    depth: int = 1,
    var_cap: int = ENUMERATION_CAP,
) -> EquivalenceVerdict:
    """Equivalence under every revision chain up to `depth` long.

    Chains draw from the canonical non-constant formulas over the combined
    vocabulary, shortest chains first, lexicographic within a length. A
    true verdict means no separation was found within the searched depth,
    nothing more.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    atoms = _combined_atoms(a, b)
    if len(atoms) > var_cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {var_cap}")
    base = equivalent_sequences(a, b, var_cap)
    if not base.result:
        assert base.witness is not None
        return EquivalenceVerdict(False, base.witness, searched_depth=depth)
    candidates = [formula for formula, lang in canonical_query_space(atoms, var_cap) if lang]
    for length in range(1, depth + 1):
        for chain in product(candidates, repeat=length):
            ra, rb = a, b
            for formula in chain:
                ra = ra.revise(formula)
                rb = rb.revise(formula)
            verdict = equivalent_sequences(ra, rb, var_cap)
            if not verdict.result:
                assert verdict.witness is not None
                witness = Witness(verdict.witness.query, verdict.witness.k, chain)
                return EquivalenceVerdict(False, witness, searched_depth=depth)
    return EquivalenceVerdict(True, searched_depth=depth)


def subsumes(a: BeliefSequence, b: BeliefSequence, var_cap: int = ENUMERATION_CAP) -> bool:
    """True when every canonical query b settles as yes, a settles as yes."""
    atoms = _combined_atoms(a, b)
    if len(atoms) > var_cap:
        raise ValueError(f"cap exceeded: {len(atoms)} atoms, cap {var_cap}")
    for formula, _ in canonical_query_space(atoms, var_cap):
        if is_consequence(b, formula) and not is_consequence(a, formula):
            return False
    return True
