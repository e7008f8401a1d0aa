# values -> source text; parse(pretty(x)) gives x back

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import singledispatch

from src.core.syntax.ast import Atom, Equation, Falsity, Program, Rule
from src.core.terms.rename import is_reserved
from src.core.terms.term import Compound, Term, Var


def readable_names(variables: Iterable[str], taken: Iterable[str] = ()) -> dict[str, str]:
    """Display names for reserved variables: `__L0` prints as `_L0`."""
    used = set(taken)
    out: dict[str, str] = {}
    for name in sorted(set(variables)):
        if not is_reserved(name):
            continue
        candidate = name[1:]
        while candidate in used:
            candidate += "_"
        used.add(candidate)
        out[name] = candidate
    return out


def pretty_term(term: Term, names: Mapping[str, str] | None = None) -> str:
    if isinstance(term, Var):
        return names.get(term.name, term.name) if names else term.name
    if term.functor == "+" and len(term.args) == 2:
        left, right = term.args
        rhs = pretty_term(right, names)
        if isinstance(right, Compound) and right.functor == "+" and len(right.args) == 2:
            rhs = f"({rhs})"
        return f"{pretty_term(left, names)}+{rhs}"
    if not term.args:
        return term.functor
    return f"{term.functor}({', '.join(pretty_term(a, names) for a in term.args)})"


def pretty_atom(atom: Atom, names: Mapping[str, str] | None = None) -> str:
    if not atom.args:
        return atom.predicate
    return f"{atom.predicate}({', '.join(pretty_term(a, names) for a in atom.args)})"


def pretty_builtin(b: Equation | Falsity, names: Mapping[str, str] | None = None) -> str:
    if isinstance(b, Falsity):
        return "false"
    return f"{pretty_term(b.lhs, names)} = {pretty_term(b.rhs, names)}"


def pretty_goals(atoms, builtins=(), names: Mapping[str, str] | None = None) -> str:
    parts = [pretty_atom(a, names) for a in atoms] + [pretty_builtin(b, names) for b in builtins]
    return ", ".join(parts) if parts else "true"


def pretty_store(atoms, builtins, global_names, inconsistent: bool = False,
                 names: Mapping[str, str] | None = None) -> str:
    if inconsistent:
        return "<false>"
    shown = ", ".join(sorted(names.get(g, g) if names else g for g in global_names))
    return f"{pretty_goals(atoms, builtins, names)} # globals: {shown}".rstrip()


def pretty_rule(rule: Rule) -> str:
    body = pretty_goals(rule.user_body, rule.builtin_body)
    if rule.guard:
        body = f"{pretty_goals((), rule.guard)} | {body}"
    if not rule.removed:
        return f"{rule.name} @ {', '.join(pretty_atom(a) for a in rule.kept)} ==> {body}."
    removed = ", ".join(pretty_atom(a) for a in rule.removed)
    if rule.kept:
        removed = f"{', '.join(pretty_atom(a) for a in rule.kept)} \\ {removed}"
    return f"{rule.name} @ {removed} <=> {body}."


def pretty_program(program: Program) -> str:
    return "\n".join(pretty_rule(r) for r in program)


@singledispatch
def pretty(value) -> str:
    """Source text for programs, rules, terms and (once registered) states, peaks and reports."""
    raise TypeError(f"cannot pretty-print {type(value).__name__}")


pretty.register(Program, pretty_program)
pretty.register(Rule, pretty_rule)
pretty.register(Atom, lambda atom: pretty_atom(atom))
pretty.register(Var, lambda term: pretty_term(term))
pretty.register(Compound, lambda term: pretty_term(term))
