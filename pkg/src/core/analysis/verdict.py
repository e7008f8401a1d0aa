from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from src.config.settings import Settings
from src.core.engine.step import Derivation
from src.core.errors import ConfigError
from src.core.peaks.peak import CriticalPeak
from src.core.state.state import CanonicalState


class PeakStatus(Enum):
    JOINABLE = "JOINABLE"
    DECREASING = "DECREASING"
    STRONGLY_JOINABLE = "STRONGLY_JOINABLE"
    NOT_CLOSED = "NOT_CLOSED"
    REFUTED = "REFUTED"

    @property
    def closed(self) -> bool:
        return self not in (PeakStatus.NOT_CLOSED, PeakStatus.REFUTED)


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 4
    max_states: int = 2000
    max_valleys: int = 1

    def __post_init__(self):
        for name in ("max_depth", "max_states", "max_valleys"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0, got {getattr(self, name)}")

    @classmethod
    def from_settings(cls, s: Settings) -> SearchBudget:
        return cls(s.max_depth, s.max_states, s.max_valleys)


@dataclass(frozen=True)
class Valley:
    left_closing: Derivation
    right_closing: Derivation

    @property
    def meet(self) -> tuple[CanonicalState, CanonicalState]:
        return self.left_closing.target, self.right_closing.target

    @property
    def length(self) -> int:
        return len(self.left_closing) + len(self.right_closing)


@dataclass(frozen=True)
class PeakVerdict:
    peak: CriticalPeak
    status: PeakStatus
    certificate: Valley | None = None
    alternatives: tuple[Valley, ...] = ()
    notes: tuple[str, ...] = ()
    budget: SearchBudget | None = None
    via_tactic: bool = False

    @property
    def closed(self) -> bool:
        return self.status.closed
