from __future__ import annotations

from collections.abc import Iterable, Mapping

from src.core.terms.substitution import Substitution
from src.core.terms.term import Compound, Term, Var

def _walk(t: Term, bindings: dict[str, Term]) -> Term:
    while isinstance(t, Var) and t.name in bindings:
        t = bindings[t.name]
    return t


def _occurs(name: str, t: Term, bindings: dict[str, Term]) -> bool:
    stack = [t]
    while stack:
        cur = _walk(stack.pop(), bindings)
        if isinstance(cur, Var):
            if cur.name == name:
                return True
        else:
            stack.extend(cur.args)
    return False


def _resolve(t: Term, bindings: dict[str, Term]) -> Term:
    t = _walk(t, bindings)
    if isinstance(t, Var) or not t.args:
        return t
    return Compound(t.functor, tuple(_resolve(a, bindings) for a in t.args))


def unify(pairs: Iterable[tuple[Term, Term]]) -> Substitution | None:
    """Most general unifier of all pairs, or None when there is none.

    Occurs check is always on. The result is idempotent.
    """
    bindings: dict[str, Term] = {}
    stack = list(reversed(list(pairs)))

    while stack:
        s, t = stack.pop()
        s = _walk(s, bindings)
        t = _walk(t, bindings)
        if s is t or s == t:
            continue
        if isinstance(s, Var):
            if _occurs(s.name, t, bindings):
                return None
            bindings[s.name] = t
        elif isinstance(t, Var):
            if _occurs(t.name, s, bindings):
                return None
            bindings[t.name] = s
        elif s.functor != t.functor or len(s.args) != len(t.args):
            return None
        else:
            stack.extend(reversed(list(zip(s.args, t.args))))

    return Substitution({name: _resolve(t, bindings) for name, t in bindings.items()})


def match(pattern: Term, term: Term, bindings: Mapping[str, Term] | None = None) -> dict[str, Term] | None:
    """One-way matching: bind variables of `pattern` only, so that pattern·θ == term.

    Variables of `term` are treated as constants.
    """
    theta = dict(bindings) if bindings else {}
    stack = [(pattern, term)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            bound = theta.get(p.name)
            if bound is None:
                theta[p.name] = t
            elif bound != t:
                return None
        elif isinstance(t, Var):
            return None
        elif p.functor != t.functor or len(p.args) != len(t.args):
            return None
        else:
            stack.extend(zip(p.args, t.args))
    return theta
