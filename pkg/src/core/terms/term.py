from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def variables(self) -> frozenset[str]:
        return frozenset((self.name,))

    def substitute(self, subst) -> Term:
        return subst.get(self.name, self)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Compound:
    """Function application; constants and integer literals are 0-ary compounds."""

    functor: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def variables(self) -> frozenset[str]:
        return frozenset(iter_variables(self))

    def substitute(self, subst) -> Term:
        if not self.args:
            return self
        return Compound(self.functor, tuple(a.substitute(subst) for a in self.args))

    def __str__(self) -> str:
        from src.core.syntax.pretty import pretty_term
        return pretty_term(self)


Term = Union[Var, Compound]


def const(name: str) -> Compound:
    return Compound(name)


def iter_variables(term: Term) -> Iterator[str]:
    """Variable names in depth-first, left-to-right order (repetitions kept)."""
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            yield t.name
        else:
            stack.extend(reversed(t.args))


def occurrences(term: Term, counts: dict[str, int] | None = None) -> dict[str, int]:
    counts = {} if counts is None else counts
    for name in iter_variables(term):
        counts[name] = counts.get(name, 0) + 1
    return counts


def symbol_count(term: Term) -> int:
    """Number of function symbols, variables excluded."""
    if isinstance(term, Var):
        return 0
    return 1 + sum(symbol_count(a) for a in term.args)
