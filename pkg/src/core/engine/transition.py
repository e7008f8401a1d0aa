# the labeled transition relation

from __future__ import annotations

from collections.abc import Iterable, Iterator

from src.config.logger import get_logger
from src.core.engine.step import Derivation, LabeledStep
from src.core.errors import ReplayError
from src.core.state.canonical import canonicalize, equivalent
from src.core.state.state import CanonicalState, State
from src.core.syntax.ast import Atom, Equation, Program, Rule
from src.core.terms.rename import FreshNames, rename_apart
from src.core.terms.substitution import Substitution
from src.core.terms.unify import match


def _head_matches(heads: tuple[Atom, ...], store: tuple[Atom, ...], i: int = 0,
                  used: tuple[int, ...] = (), theta: dict | None = None) -> Iterator[tuple[tuple[int, ...], dict]]:
    """Injective maps of head atoms onto store occurrences, with the matcher they induce."""
    theta = {} if theta is None else theta
    if i == len(heads):
        yield used, theta
        return
    head = heads[i]
    for j, atom in enumerate(store):
        if j in used or atom.predicate != head.predicate or atom.arity != head.arity:
            continue
        extended = match(head.as_term(), atom.as_term(), theta)
        if extended is not None:
            yield from _head_matches(heads, store, i + 1, used + (j,), extended)


def _guard_holds(rule: Rule, theta) -> bool:
    for g in rule.guard:
        if not isinstance(g, Equation):
            return False
        if g.lhs.substitute(theta) != g.rhs.substitute(theta):
            return False
    return True


def _fire(rule: Rule, source: CanonicalState, removed: Iterable[int], theta) -> CanonicalState:
    gone = set(removed)
    rest = tuple(a for i, a in enumerate(source.user_store) if i not in gone)
    body = tuple(a.substitute(theta) for a in rule.user_body)
    builtin = source.residual + tuple(b.substitute(theta) for b in rule.builtin_body)
    return canonicalize(State(rest + body, builtin, source.globals))


def _renamed(rule: Rule, source: CanonicalState) -> Rule:
    return rename_apart(source.variables() | source.globals, rule, FreshNames(tag="V"))


def applicable_steps(program: Program, state: State | CanonicalState,
                     allowed: Iterable[str] | None = None) -> tuple[LabeledStep, ...]:
    """Every step from `state` by a rule in `allowed` (all rules when None), in program/position order."""
    source = canonicalize(state)
    if source.inconsistent:
        return ()

    names = None if allowed is None else frozenset(allowed)
    steps: list[LabeledStep] = []
    for rule in program:
        if names is not None and rule.name not in names:
            continue
        renamed = _renamed(rule, source)
        n_kept = len(renamed.kept)
        for positions, theta in _head_matches(renamed.heads, source.user_store):
            if not _guard_holds(renamed, theta):
                continue
            steps.append(LabeledStep(
                rule.name,
                positions[:n_kept],
                positions[n_kept:],
                Substitution(theta),
                _fire(renamed, source, positions[n_kept:], theta),
            ))
    return tuple(steps)


def apply_step(program: Program, state: State | CanonicalState, rule_name: str,
               kept: tuple[int, ...], removed: tuple[int, ...]) -> CanonicalState | None:
    """Fire `rule_name` on the given store positions, or None when it does not apply there."""
    source = canonicalize(state)
    rule = program.rule(rule_name)
    if rule is None or source.inconsistent:
        return None
    if len(kept) != len(rule.kept) or len(removed) != len(rule.removed):
        return None
    positions = tuple(kept) + tuple(removed)
    if len(set(positions)) != len(positions) or any(not 0 <= p < len(source.user_store) for p in positions):
        return None

    renamed = _renamed(rule, source)
    theta: dict | None = {}
    for head, p in zip(renamed.heads, positions):
        theta = match(head.as_term(), source.user_store[p].as_term(), theta)
        if theta is None:
            return None
    if not _guard_holds(renamed, theta):
        return None
    return _fire(renamed, source, removed, theta)


def replay(program: Program, derivation: Derivation) -> CanonicalState:
    """Re-execute every step by rule name and match; the final canonical state."""
    logger = get_logger("replay")
    current = canonicalize(derivation.source)

    try:
        for i, step in enumerate(derivation.steps):
            if program.rule(step.rule_name) is None:
                raise ReplayError(f"unknown rule '{step.rule_name}'", i)
            target = apply_step(program, current, step.rule_name, step.matched_kept, step.matched_removed)
            if target is None:
                raise ReplayError(f"rule '{step.rule_name}' does not apply at the recorded positions", i)
            if not equivalent(target, step.target):
                raise ReplayError(f"rule '{step.rule_name}' does not reach the recorded state", i)
            current = target
    except ReplayError as e:
        logger.error(f"certificate does not replay - {e}")
        raise

    return current
