# normal forms of states and the equivalence they decide

from __future__ import annotations

from functools import lru_cache

from src.config.logger import get_logger
from src.config.settings import settings
from src.core.state.state import INCONSISTENT, LOCAL_PREFIX, CanonicalState, State
from src.core.syntax.ast import Atom, Equation
from src.core.terms.substitution import Substitution, apply
from src.core.terms.term import Compound, Term, Var
from src.core.terms.unify import unify


@lru_cache(maxsize=1)
def default_branch_limit() -> int:
    return settings().canon_branch_limit


def _representatives(sigma: Substitution, global_names: frozenset[str]) -> Substitution:
    """Rebase an mgu so each variable class is represented by its least global, if it has one."""
    classes: dict[str, list[str]] = {}
    for name, t in sigma.items():
        if isinstance(t, Var):
            classes.setdefault(t.name, [t.name]).append(name)

    tau: dict[str, Term] = {}
    for head, members in classes.items():
        globals_in_class = sorted(m for m in members if m in global_names)
        if globals_in_class and globals_in_class[0] != head:
            tau[head] = Var(globals_in_class[0])

    theta = {name: apply(tau, t) for name, t in sigma.items()}
    theta.update(tau)
    return Substitution(theta)


def _candidate_key(atom: Atom, assigned: dict[str, int], counter: int, local_names: frozenset[str]):
    provisional: dict[str, int] = {}

    def key(t: Term) -> tuple:
        if isinstance(t, Compound):
            return (2, t.functor, len(t.args), tuple(key(a) for a in t.args))
        if t.name in assigned:
            return (0, assigned[t.name])
        if t.name in local_names:
            if t.name not in provisional:
                provisional[t.name] = counter + len(provisional)
            return (0, provisional[t.name])
        return (1, t.name)

    return (atom.predicate, len(atom.args), tuple(key(a) for a in atom.args)), provisional


class _Labeling:
    """Least store ordering (and induced local numbering) over all tie-breaks, up to a branch limit."""

    def __init__(self, atoms: list[Atom], assigned: dict[str, int], local_names: frozenset[str], limit: int):
        self.atoms = atoms
        self.local_names = local_names
        self.limit = limit
        self.leaves = 0
        self.truncated = False
        self.best: tuple[tuple, list[Atom], dict[str, int]] | None = None
        self._search(list(range(len(atoms))), dict(assigned), len(assigned), [], [])

    def _search(self, remaining: list[int], assigned: dict[str, int], counter: int,
                prefix: list[tuple], order: list[Atom]) -> None:
        if not remaining:
            self.leaves += 1
            candidate = tuple(prefix)
            if self.best is None or candidate < self.best[0]:
                self.best = (candidate, list(order), dict(assigned))
            return

        keyed = [(_candidate_key(self.atoms[i], assigned, counter, self.local_names), i) for i in remaining]
        least = min(k for (k, _), _ in keyed)
        if self.best is not None and tuple(prefix) + (least,) > self.best[0][:len(prefix) + 1]:
            return

        tried: set[Atom] = set()
        for (k, provisional), i in keyed:
            if k != least or self.atoms[i] in tried:
                continue
            if self.best is not None and self.leaves >= self.limit:
                self.truncated = True
                return
            tried.add(self.atoms[i])
            nxt = dict(assigned)
            nxt.update(provisional)
            self._search([j for j in remaining if j != i], nxt, counter + len(provisional),
                         prefix + [k], order + [self.atoms[i]])


def canonicalize(state: State | CanonicalState, branch_limit: int | None = None) -> CanonicalState:
    if isinstance(state, CanonicalState):
        return state
    if state.is_bottom:
        return INCONSISTENT

    sigma = unify((e.lhs, e.rhs) for e in state.builtin_store)
    if sigma is None:
        return INCONSISTENT

    theta = _representatives(sigma, state.globals)
    atoms = [a.substitute(theta) for a in state.user_store]
    residual = []
    for g in sorted(state.globals):
        bound = apply(theta, Var(g))
        if bound != Var(g):
            residual.append(Equation(Var(g), bound))

    live: set[str] = set()
    for item in atoms + residual:
        live |= item.variables()
    global_names = frozenset(state.globals & live)
    local_names = frozenset(live - global_names)

    # residual equations are ordered by their global, so their locals are numbered first
    assigned: dict[str, int] = {}
    for e in residual:
        for name in _first_occurrences(e.rhs):
            if name in local_names and name not in assigned:
                assigned[name] = len(assigned)

    limit = default_branch_limit() if branch_limit is None else branch_limit
    labeling = _Labeling(atoms, assigned, local_names, max(limit, 1))
    _, order, numbering = labeling.best if labeling.best else ((), [], assigned)
    if labeling.truncated:
        get_logger("canonicalize").debug(f"local naming truncated after {labeling.leaves} orderings")

    rename = {name: Var(f"{LOCAL_PREFIX}{i}") for name, i in numbering.items()}
    return CanonicalState(
        tuple(a.substitute(rename) for a in order),
        tuple(e.substitute(rename) for e in residual),
        global_names,
        exact=not labeling.truncated,
    )


def _first_occurrences(t: Term) -> list[str]:
    if isinstance(t, Var):
        return [t.name]
    out: list[str] = []
    for a in t.args:
        out.extend(_first_occurrences(a))
    return out


class _Bijection:
    """Backtracking search for a renaming of locals that maps one canonical state onto another."""

    def __init__(self, left: CanonicalState, right: CanonicalState):
        self.left = left
        self.right = right

    def _term(self, a: Term, b: Term, fwd: dict[str, str], bwd: dict[str, str]) -> bool:
        if isinstance(a, Var) or isinstance(b, Var):
            if not (isinstance(a, Var) and isinstance(b, Var)):
                return False
            a_local = a.name not in self.left.globals
            b_local = b.name not in self.right.globals
            if a_local != b_local:
                return False
            if not a_local:
                return a.name == b.name
            if fwd.setdefault(a.name, b.name) != b.name:
                return False
            return bwd.setdefault(b.name, a.name) == a.name
        if a.functor != b.functor or len(a.args) != len(b.args):
            return False
        return all(self._term(x, y, fwd, bwd) for x, y in zip(a.args, b.args))

    def exists(self) -> bool:
        l, r = self.left, self.right
        if l.globals != r.globals or len(l.user_store) != len(r.user_store) or len(l.residual) != len(r.residual):
            return False
        fwd: dict[str, str] = {}
        bwd: dict[str, str] = {}
        for e1, e2 in zip(l.residual, r.residual):
            if e1.lhs != e2.lhs or not self._term(e1.rhs, e2.rhs, fwd, bwd):
                return False
        return self._atoms(0, [False] * len(r.user_store), fwd, bwd)

    def _atoms(self, i: int, used: list[bool], fwd: dict[str, str], bwd: dict[str, str]) -> bool:
        if i == len(self.left.user_store):
            return True
        a = self.left.user_store[i]
        for j, b in enumerate(self.right.user_store):
            if used[j] or a.predicate != b.predicate or a.arity != b.arity:
                continue
            f, g = dict(fwd), dict(bwd)
            if all(self._term(x, y, f, g) for x, y in zip(a.args, b.args)):
                used[j] = True
                if self._atoms(i + 1, used, f, g):
                    return True
                used[j] = False
        return False


def equivalent(s1: State | CanonicalState, s2: State | CanonicalState) -> bool:
    c1, c2 = canonicalize(s1), canonicalize(s2)
    if c1 == c2:
        return True
    if c1.inconsistent or c2.inconsistent:
        return False
    if c1.exact and c2.exact:
        return False
    return _Bijection(c1, c2).exists()
