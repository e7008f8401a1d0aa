from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from src.core.errors import ConfigError
from src.core.orders.partition import Partition, PeakKind
from src.core.state.state import CanonicalState, display_names, pretty_state
from src.core.syntax.pretty import pretty
from src.core.terms.substitution import Substitution

SELECTOR_PREFIX = "peak:"


@dataclass(frozen=True)
class Overlap:
    """Which head positions of each rule were identified, and the unifier of the identification."""

    left_heads: tuple[int, ...]
    right_heads: tuple[int, ...]
    unifier: Substitution


@dataclass(frozen=True)
class CriticalPeak:
    index: int
    left_rule: str
    right_rule: str
    ancestor: CanonicalState
    left: CanonicalState
    right: CanonicalState
    overlap: Overlap
    kind: PeakKind
    pair_index: int = 1
    trivial: bool = False

    @property
    def rules(self) -> tuple[str, str]:
        return self.left_rule, self.right_rule

    @property
    def selector(self) -> str:
        return f"{SELECTOR_PREFIX}{self.left_rule}x{self.right_rule}#{self.pair_index}"


def classify(peak: CriticalPeak, partition: Partition) -> PeakKind:
    return partition.kind_of(peak.left_rule, peak.right_rule)


def parse_selector(text: str, rule_names: Iterable[str]) -> tuple[str, str, int]:
    """`peak:<r1>x<r2>#<k>`; the `x` is located by trying every split against the known rule names."""
    names = set(rule_names)
    body = text.strip()
    if not body.startswith(SELECTOR_PREFIX) or "#" not in body:
        raise ConfigError(f"malformed peak selector '{text}'")
    pair, _, k = body[len(SELECTOR_PREFIX):].rpartition("#")
    if not k.isdigit() or int(k) < 1:
        raise ConfigError(f"peak selector '{text}' needs a positive index")
    for i, ch in enumerate(pair):
        if ch == "x" and pair[:i] in names and pair[i + 1:] in names:
            return pair[:i], pair[i + 1:], int(k)
    raise ConfigError(f"peak selector '{text}' does not name two known rules")


def pretty_peak(peak: CriticalPeak) -> str:
    names = display_names(peak.ancestor, peak.left, peak.right)
    return "\n".join([
        f"peak {peak.index} [{peak.kind.value}] {peak.left_rule} x {peak.right_rule} ({peak.selector})",
        f"  ancestor: {pretty_state(peak.ancestor, names)}",
        f"  left  ({peak.left_rule}): {pretty_state(peak.left, names)}",
        f"  right ({peak.right_rule}): {pretty_state(peak.right, names)}",
    ])


pretty.register(CriticalPeak, pretty_peak)
