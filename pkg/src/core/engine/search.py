# bounded exploration of the transition relation

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field, replace

from src.config.logger import get_logger
from src.core.engine.step import Derivation
from src.core.engine.transition import applicable_steps
from src.core.state.canonical import canonicalize
from src.core.state.state import CanonicalState, State
from src.core.syntax.ast import Program


@dataclass(frozen=True)
class Reachability:
    """Canonical states reached within the bounds, each with a shortest derivation."""

    states: dict[CanonicalState, Derivation] = field(default_factory=dict)
    truncated: bool = False

    def __contains__(self, state) -> bool:
        return canonicalize(state) in self.states

    def __len__(self) -> int:
        return len(self.states)

    def derivation(self, state) -> Derivation | None:
        return self.states.get(canonicalize(state))


def reachable(program: Program, state: State | CanonicalState, allowed: Iterable[str] | None = None,
              max_depth: int = 4, max_states: int = 2000) -> Reachability:
    logger = get_logger("reachable")
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")

    names = None if allowed is None else frozenset(allowed)
    source = canonicalize(state)
    found: dict[CanonicalState, Derivation] = {source: Derivation(source)}
    frontier = [found[source]]
    truncated = False

    for depth in range(max_depth + 1):
        if not frontier:
            break
        nxt = []
        for d in frontier:
            steps = applicable_steps(program, d.target, names)
            if steps and depth == max_depth:
                truncated = True
                break
            for step in steps:
                if step.target in found:
                    continue
                if len(found) >= max_states:
                    truncated = True
                    continue
                found[step.target] = d.extend(step)
                nxt.append(found[step.target])
        frontier = nxt

    logger.debug(f"{len(found)} states within depth {max_depth} (truncated={truncated})")
    return Reachability(found, truncated)


def run_trace(program: Program, state: State | CanonicalState, steps: int,
              allowed: Iterable[str] | None = None) -> Derivation:
    """Execute up to `steps` transitions, always taking the first applicable step."""
    derivation = Derivation(canonicalize(state))
    options = applicable_steps(program, derivation.target, allowed)
    while options and len(derivation) < steps:
        derivation = derivation.extend(options[0])
        options = applicable_steps(program, derivation.target, allowed)
    return replace(derivation, fixpoint=not options)
