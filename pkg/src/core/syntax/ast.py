from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Union

from src.core.terms.term import Compound, Term, iter_variables

@dataclass(frozen=True, slots=True)
class Atom:
    """User-defined constraint `predicate(args…)`."""

    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def as_term(self) -> Compound:
        return Compound(self.predicate, self.args)

    def variables(self) -> frozenset[str]:
        return frozenset(name for a in self.args for name in iter_variables(a))

    def substitute(self, subst) -> Atom:
        if not self.args:
            return self
        return Atom(self.predicate, tuple(a.substitute(subst) for a in self.args))


@dataclass(frozen=True, slots=True)
class Equation:
    lhs: Term
    rhs: Term

    def variables(self) -> frozenset[str]:
        return self.lhs.variables() | self.rhs.variables()

    def substitute(self, subst) -> Equation:
        return Equation(self.lhs.substitute(subst), self.rhs.substitute(subst))


@dataclass(frozen=True, slots=True)
class Falsity:
    """The built-in constraint `false`."""

    def variables(self) -> frozenset[str]:
        return frozenset()

    def substitute(self, subst) -> Falsity:
        return self


FALSE = Falsity()

Builtin = Union[Equation, Falsity]


class RuleKind(Enum):
    SIMPLIFICATION = "simplification"
    PROPAGATION = "propagation"


@dataclass(frozen=True)
class Rule:
    """`name @ kept \\ removed <=> guard | user_body, builtin_body.`"""

    name: str
    kept: tuple[Atom, ...]
    removed: tuple[Atom, ...]
    guard: tuple[Builtin, ...] = ()
    user_body: tuple[Atom, ...] = ()
    builtin_body: tuple[Builtin, ...] = ()

    @property
    def kind(self) -> RuleKind:
        return RuleKind.SIMPLIFICATION if self.removed else RuleKind.PROPAGATION

    @property
    def heads(self) -> tuple[Atom, ...]:
        """Kept atoms first, then removed atoms; head positions index this tuple."""
        return self.kept + self.removed

    def head_variables(self) -> frozenset[str]:
        return frozenset(v for a in self.heads for v in a.variables())

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for part in (self.kept, self.removed, self.guard, self.user_body, self.builtin_body):
            for item in part:
                out |= item.variables()
        return frozenset(out)

    def substitute(self, subst) -> Rule:
        return Rule(
            self.name,
            tuple(a.substitute(subst) for a in self.kept),
            tuple(a.substitute(subst) for a in self.removed),
            tuple(b.substitute(subst) for b in self.guard),
            tuple(a.substitute(subst) for a in self.user_body),
            tuple(b.substitute(subst) for b in self.builtin_body),
        )


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.rules)

    def rule(self, name: str) -> Rule | None:
        for r in self.rules:
            if r.name == name:
                return r
        return None

    def index(self, name: str) -> int:
        return self.names.index(name)

    def union(self, other: Program) -> Program:
        from src.core.errors import ContractError

        shared = set(self.names) & set(other.names)
        if shared:
            raise ContractError(f"rule names shared between programs: {', '.join(sorted(shared))}")
        return Program(self.rules + other.rules)
