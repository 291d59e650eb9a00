"""Propositional formula syntax: tree nodes, parser, printer, evaluation.

The concrete grammar, shared by every text surface of the package (sequence
files, the command line, HTTP payloads):

    formula := iff
    iff     := implies ("<->" implies)*     left associative
    implies := or ("->" implies)?           right associative
    or      := and ("|" and)*               left associative
    and     := unary ("&" unary)*           left associative
    unary   := "~" unary | "(" formula ")" | "true" | "false" | atom
    atom    := [a-z][a-z0-9_]*

Precedence, tightest first: ~  &  |  ->  <->.  `render` emits the minimal
parenthesisation, and `parse(render(f))` returns a tree structurally equal
to `f`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping


class ParseError(ValueError):
    """Malformed formula text; `position` is a 0-based character offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at offset {position}")
        self.position = position


class Formula:
    """Base class of all formula nodes; instances are immutable and hashable."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"{type(self).__name__}<{render(self)}>"


@dataclass(frozen=True, slots=True, repr=False)
class Const(Formula):
    value: bool


@dataclass(frozen=True, slots=True, repr=False)
class Var(Formula):
    name: str


@dataclass(frozen=True, slots=True, repr=False)
class Not(Formula):
    child: Formula


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula


TRUE = Const(True)
FALSE = Const(False)

_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")
_TOKEN_RE = re.compile(r"<->|->|[~&|()]|[a-z][a-z0-9_]*")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def _here(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def _advance(self) -> str:
        token = self.tokens[self.pos][0]
        self.pos += 1
        return token

    def parse(self) -> Formula:
        formula = self._iff()
        if self.pos < len(self.tokens):
            raise ParseError(f"unexpected {self._peek()!r}", self._here())
        return formula

    def _iff(self) -> Formula:
        formula = self._implies()
        while self._peek() == "<->":
            self._advance()
            formula = Iff(formula, self._implies())
        return formula

    def _implies(self) -> Formula:
        formula = self._or()
        if self._peek() == "->":
            self._advance()
            return Implies(formula, self._implies())
        return formula

    def _or(self) -> Formula:
        formula = self._and()
        while self._peek() == "|":
            self._advance()
            formula = Or(formula, self._and())
        return formula

    def _and(self) -> Formula:
        formula = self._unary()
        while self._peek() == "&":
            self._advance()
            formula = And(formula, self._unary())
        return formula

    def _unary(self) -> Formula:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of input", len(self.text))
        if token == "~":
            self._advance()
            return Not(self._unary())
        if token == "(":
            self._advance()
            formula = self._iff()
            if self._peek() != ")":
                raise ParseError("expected ')'", self._here())
            self._advance()
            return formula
        if token == "true":
            self._advance()
            return TRUE
        if token == "false":
            self._advance()
            return FALSE
        if _ATOM_RE.fullmatch(token):
            self._advance()
            return Var(token)
        raise ParseError(f"unexpected {token!r}", self._here())


def parse(text: str) -> Formula:
    """Parse formula text. Raises ParseError with the offending offset."""
    return _Parser(text).parse()


_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}


def _child(formula: Formula, minimum: int) -> str:
    text = render(formula)
    if _PRECEDENCE[type(formula)] < minimum:
        return f"({text})"
    return text


def render(formula: Formula) -> str:
    """Concrete text for a tree, minimally parenthesised."""
    if isinstance(formula, Const):
        return "true" if formula.value else "false"
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        return "~" + _child(formula.child, 5)
    if isinstance(formula, And):
        return f"{_child(formula.left, 4)} & {_child(formula.right, 5)}"
    if isinstance(formula, Or):
        return f"{_child(formula.left, 3)} | {_child(formula.right, 4)}"
    if isinstance(formula, Implies):
        # right associative: nested implication on the right stays bare
        return f"{_child(formula.left, 3)} -> {_child(formula.right, 2)}"
    if isinstance(formula, Iff):
        return f"{_child(formula.left, 1)} <-> {_child(formula.right, 2)}"
    raise TypeError(f"not a formula: {formula!r}")


def evaluate(formula: Formula, valuation: Mapping[str, bool]) -> bool:
    """Classical truth value under a total assignment of the formula's atoms.

    Raises KeyError when the assignment misses an atom that occurs in the
    formula.
    """
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Var):
        return bool(valuation[formula.name])
    if isinstance(formula, Not):
        return not evaluate(formula.child, valuation)
    if isinstance(formula, And):
        return evaluate(formula.left, valuation) and evaluate(formula.right, valuation)
    if isinstance(formula, Or):
        return evaluate(formula.left, valuation) or evaluate(formula.right, valuation)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, valuation)) or evaluate(formula.right, valuation)
    if isinstance(formula, Iff):
        return evaluate(formula.left, valuation) == evaluate(formula.right, valuation)
    raise TypeError(f"not a formula: {formula!r}")


def syntactic_language(formula: Formula) -> frozenset[str]:
    """All atoms occurring in the tree, whether or not they matter."""
    names: set[str] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(names)


if __name__ == "__main__":
    for sample in ["p & (q | ~q)", "p -> q -> r", "~(p | q)", "a <-> b <-> c"]:
        tree = parse(sample)
        print(f"{sample!r:24} -> {tree!r} -> {render(tree)!r}")
