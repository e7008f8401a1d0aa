# label-trace automata that restrict the closings of a peak

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from enum import Enum

from src.core.analysis.verdict import PeakStatus
from src.core.orders.preorder import RulePreorder


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class Pattern:
    """Deterministic automaton over rule labels, run separately on each side of a valley."""

    name = "any"
    success = PeakStatus.JOINABLE
    bounded_by_budget = True

    def __init__(self, order: RulePreorder | None = None):
        self.order = order

    def start(self, side: Side) -> Hashable:
        return 0

    def advance(self, side: Side, phase: Hashable, label: str) -> Hashable | None:
        return phase

    def accepting(self, side: Side, phase: Hashable) -> bool:
        return True

    def max_steps(self, side: Side) -> int | None:
        return None

    def label_key(self, label: str) -> tuple:
        if self.order is None:
            return (0, label)
        return self.order.label_key(label)

    def describe(self) -> str:
        return self.name


class AnyPattern(Pattern):
    pass


class SingleStepPattern(Pattern):
    name = "single_step_eq"
    success = PeakStatus.STRONGLY_JOINABLE

    def advance(self, side, phase, label):
        return 1 if phase == 0 else None

    def max_steps(self, side):
        return 1


class StarPattern(Pattern):
    """A-phase labels strictly below the own peak label, one optional label ≼ the other, then T-phase labels below either."""

    name = "star"
    success = PeakStatus.DECREASING

    def __init__(self, alpha: str, beta: str, order: RulePreorder):
        super().__init__(order)
        self.alpha = alpha
        self.beta = beta

    def _labels(self, side: Side) -> tuple[str, str]:
        return (self.alpha, self.beta) if side is Side.LEFT else (self.beta, self.alpha)

    def start(self, side):
        return "A"

    def advance(self, side, phase, label):
        own, other = self._labels(side)
        if phase == "A" and self.order.gt(own, label):
            return "A"
        if phase == "A" and self.order.geq(other, label):
            return "T"
        if self.order.gt(own, label) or self.order.gt(other, label):
            return "T"
        return None

    def describe(self) -> str:
        return f"star({self.alpha},{self.beta})"


class TacticPattern(Pattern):
    """Only the given label sequences, each side independently."""

    name = "tactic"
    bounded_by_budget = False

    def __init__(self, left: Iterable[Sequence[str]], right: Iterable[Sequence[str]],
                 order: RulePreorder | None = None, success: PeakStatus = PeakStatus.JOINABLE):
        super().__init__(order)
        self.sequences = {Side.LEFT: tuple(tuple(s) for s in left), Side.RIGHT: tuple(tuple(s) for s in right)}
        self.success = success

    def start(self, side):
        return frozenset((i, 0) for i in range(len(self.sequences[side])))

    def advance(self, side, phase, label):
        seqs = self.sequences[side]
        nxt = frozenset((i, k + 1) for i, k in phase if k < len(seqs[i]) and seqs[i][k] == label)
        return nxt or None

    def accepting(self, side, phase):
        seqs = self.sequences[side]
        return any(k == len(seqs[i]) for i, k in phase)

    def max_steps(self, side):
        return max((len(s) for s in self.sequences[side]), default=0)


class ModularPattern(Pattern):
    """Left closing by any number of `left_rules` steps, right closing by at most one `right_rules` step."""

    name = "modular"

    def __init__(self, left_rules: Iterable[str], right_rules: Iterable[str]):
        super().__init__()
        self.left_rules = frozenset(left_rules)
        self.right_rules = frozenset(right_rules)

    def advance(self, side, phase, label):
        if side is Side.LEFT:
            return phase if label in self.left_rules else None
        return 1 if phase == 0 and label in self.right_rules else None

    def max_steps(self, side):
        return 1 if side is Side.RIGHT else None
