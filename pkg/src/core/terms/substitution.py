from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from types import MappingProxyType

from src.core.terms.term import Compound, Term, Var

class Substitution(Mapping[str, Term]):
    """Finite map from variable names to terms. Identity bindings are dropped."""

    __slots__ = ("_bindings", "_hash")

    def __init__(self, bindings: Mapping[str, Term] | Iterable[tuple[str, Term]] = ()):
        items = bindings.items() if isinstance(bindings, Mapping) else bindings
        cleaned = {name: t for name, t in items if not (isinstance(t, Var) and t.name == name)}
        self._bindings = MappingProxyType(cleaned)
        self._hash = None

    def __getitem__(self, name: str) -> Term:
        return self._bindings[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._bindings.items()))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, Substitution):
            return dict(self._bindings) == dict(other._bindings)
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}↦{v}" for k, v in sorted(self._bindings.items()))
        return f"{{{inner}}}"

    def apply(self, term: Term) -> Term:
        return apply(self, term)

    def compose(self, other: Substitution) -> Substitution:
        """`self` first, then `other`."""
        merged = {name: apply(other, t) for name, t in self._bindings.items()}
        for name, t in other.items():
            merged.setdefault(name, t)
        return Substitution(merged)

    def restrict(self, names: Iterable[str]) -> Substitution:
        keep = set(names)
        return Substitution((n, t) for n, t in self._bindings.items() if n in keep)

    def is_idempotent(self) -> bool:
        domain = set(self._bindings)
        return not any(domain & t.variables() for t in self._bindings.values())


EMPTY = Substitution()


def apply(s: Mapping[str, Term], t: Term) -> Term:
    if isinstance(t, Var):
        return s.get(t.name, t)
    if not t.args or not s:
        return t
    return Compound(t.functor, tuple(apply(s, a) for a in t.args))
