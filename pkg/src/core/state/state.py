from __future__ import annotations

from dataclasses import dataclass, field

from src.core.syntax.ast import FALSE, Atom, Builtin, Equation, Falsity
from src.core.syntax.pretty import pretty, pretty_store, readable_names
from src.core.terms.rename import is_reserved

LOCAL_PREFIX = "__L"


@dataclass(frozen=True)
class State:
    """⟨user store; built-in store; globals⟩. A `false` in the built-in store makes it ⊥."""

    user_store: tuple[Atom, ...] = ()
    builtin_store: tuple[Builtin, ...] = ()
    globals: frozenset[str] = frozenset()

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for item in self.user_store + self.builtin_store:
            out |= item.variables()
        return frozenset(out)

    def free_variables(self) -> frozenset[str]:
        return self.variables() | self.globals

    @property
    def local_variables(self) -> frozenset[str]:
        return self.variables() - self.globals

    @property
    def is_bottom(self) -> bool:
        return any(isinstance(b, Falsity) for b in self.builtin_store)


@dataclass(frozen=True)
class CanonicalState:
    """Normal form of a state modulo equivalence.

    Locals are named `__L0, __L1, …` in order of first occurrence, the user store
    is sorted, and residual equations bind globals only. Equal canonical forms
    mean equivalent states; `exact` is False when local naming hit the branch limit.
    """

    user_store: tuple[Atom, ...] = ()
    residual: tuple[Equation, ...] = ()
    globals: frozenset[str] = frozenset()
    inconsistent: bool = False
    exact: bool = field(default=True, compare=False)

    @property
    def builtin_store(self) -> tuple[Builtin, ...]:
        return (FALSE,) if self.inconsistent else self.residual

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for item in self.user_store + self.residual:
            out |= item.variables()
        return frozenset(out)

    @property
    def local_variables(self) -> frozenset[str]:
        return self.variables() - self.globals

    def as_state(self) -> State:
        if self.inconsistent:
            return State((), (FALSE,), frozenset())
        return State(self.user_store, self.residual, self.globals)

    def sort_key(self) -> tuple:
        if self.inconsistent:
            return (1,)
        return (
            0,
            tuple(atom_key(a) for a in self.user_store),
            tuple((e.lhs.name, term_key(e.rhs)) for e in self.residual),
            tuple(sorted(self.globals)),
        )


INCONSISTENT = CanonicalState(inconsistent=True)


def local_index(name: str) -> int | None:
    if name.startswith(LOCAL_PREFIX) and name[len(LOCAL_PREFIX):].isdigit():
        return int(name[len(LOCAL_PREFIX):])
    return None


def term_key(t) -> tuple:
    """Total order on canonical terms: locals by index, then globals by name, then compounds."""
    if hasattr(t, "functor"):
        return (2, t.functor, len(t.args), tuple(term_key(a) for a in t.args))
    idx = local_index(t.name)
    return (0, idx) if idx is not None else (1, t.name)


def atom_key(a: Atom) -> tuple:
    return (a.predicate, len(a.args), tuple(term_key(t) for t in a.args))


def compose(s1: State, s2: State, quantified=frozenset()) -> State:
    """Quantified conjunction: union of both stores, globals of both minus `quantified`."""
    from src.core.errors import ContractError

    s1 = s1.as_state() if isinstance(s1, CanonicalState) else s1
    s2 = s2.as_state() if isinstance(s2, CanonicalState) else s2
    shared = s1.free_variables() & s2.free_variables()
    clash = shared - (s1.globals & s2.globals)
    if clash:
        raise ContractError(f"local variables shared between composed states: {', '.join(sorted(clash))}")
    return State(
        s1.user_store + s2.user_store,
        s1.builtin_store + s2.builtin_store,
        (s1.globals | s2.globals) - frozenset(quantified),
    )


def display_names(*states) -> dict[str, str]:
    """One readable naming of reserved variables shared by several states."""
    variables: set[str] = set()
    for s in states:
        variables |= s.variables() | s.globals
    return readable_names(variables, taken={v for v in variables if not is_reserved(v)})


def pretty_state(state, names=None) -> str:
    names = display_names(state) if names is None else names
    if isinstance(state, CanonicalState):
        return pretty_store(state.user_store, state.residual, state.globals, state.inconsistent, names)
    if state.is_bottom:
        return pretty_store((), (), (), True)
    return pretty_store(state.user_store, state.builtin_store, state.globals, False, names)


pretty.register(State, lambda s: pretty_state(s))
pretty.register(CanonicalState, lambda s: pretty_state(s))
