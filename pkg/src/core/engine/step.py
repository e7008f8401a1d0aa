from __future__ import annotations

from dataclasses import dataclass

from src.core.state.state import CanonicalState
from src.core.terms.substitution import Substitution

@dataclass(frozen=True)
class LabeledStep:
    """One transition, labeled by the applied rule.

    Positions index the canonical source user store; `unifier` binds the
    renamed-apart rule's variables.
    """

    rule_name: str
    matched_kept: tuple[int, ...]
    matched_removed: tuple[int, ...]
    unifier: Substitution
    target: CanonicalState


@dataclass(frozen=True)
class Derivation:
    source: CanonicalState
    steps: tuple[LabeledStep, ...] = ()
    # set by run_trace when the target has no applicable step
    fixpoint: bool = False

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.rule_name for s in self.steps)

    @property
    def target(self) -> CanonicalState:
        return self.steps[-1].target if self.steps else self.source

    def extend(self, step: LabeledStep) -> Derivation:
        return Derivation(self.source, self.steps + (step,))
