from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from src.core.errors import ConfigError
from src.core.syntax.ast import Program


class PeakKind(Enum):
    INDUCTIVE = "inductive"
    COINDUCTIVE = "coinductive"


@dataclass(frozen=True)
class Partition:
    """Split of a program's rule names into an inductive and a coinductive part."""

    inductive: frozenset[str] = frozenset()
    coinductive: frozenset[str] = frozenset()

    def __post_init__(self):
        both = self.inductive & self.coinductive
        if both:
            raise ConfigError(f"rules both inductive and coinductive: {', '.join(sorted(both))}")

    @property
    def rules(self) -> frozenset[str]:
        return self.inductive | self.coinductive

    def kind_of(self, *rule_names: str) -> PeakKind:
        if any(name in self.coinductive for name in rule_names):
            return PeakKind.COINDUCTIVE
        return PeakKind.INDUCTIVE

    @classmethod
    def all_inductive(cls, program: Program) -> Partition:
        return cls(frozenset(program.names), frozenset())

    @classmethod
    def all_coinductive(cls, program: Program) -> Partition:
        return cls(frozenset(), frozenset(program.names))

    @classmethod
    def by_atom_count(cls, program: Program) -> Partition:
        """Rules that strictly reduce the number of atoms are inductive, the rest coinductive."""
        inductive = {r.name for r in program if len(r.user_body) < len(r.removed)}
        return cls(frozenset(inductive), frozenset(program.names) - inductive)

    @classmethod
    def for_program(cls, program: Program, inductive: Iterable[str] | None = None,
                    coinductive: Iterable[str] | None = None) -> Partition:
        """Complete a declared split: rules named on one side only go to the other side."""
        names = frozenset(program.names)
        if inductive is None and coinductive is None:
            return cls.by_atom_count(program)
        ind = frozenset(inductive or ())
        coind = frozenset(coinductive or ())
        unknown = (ind | coind) - names
        if unknown:
            raise ConfigError(f"partition names unknown rules: {', '.join(sorted(unknown))}")
        if inductive is None:
            ind = names - coind
        elif coinductive is None:
            coind = names - ind
        missing = names - ind - coind
        if missing:
            raise ConfigError(f"partition leaves rules unassigned: {', '.join(sorted(missing))}")
        return cls(ind, coind)
