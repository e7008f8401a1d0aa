# .cfg files: partition, order, limits, options and tactics

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedInput

from src.config.logger import get_logger
from src.config.settings import Settings
from src.core.analysis.criteria import Tactic
from src.core.analysis.verdict import SearchBudget
from src.core.errors import ConfigError
from src.core.orders.partition import Partition
from src.core.orders.preorder import RulePreorder
from src.core.peaks.peak import parse_selector
from src.core.syntax.ast import Program

SECTIONS = ("partition", "order", "limits", "options", "tactic")
_KEYS = {
    "partition": ("inductive", "coinductive"),
    "limits": ("max_depth", "max_states", "max_valleys"),
    "options": ("assume_terminating", "enumerate_orders", "format"),
    "tactic": ("left", "right"),
}
FORMATS = ("text", "machine")


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark.open("analysis_config.lark", rel_to=__file__, parser="lalr", maybe_placeholders=True)


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything a `.cfg` file can set. `None` means "not given here", so lower layers decide."""

    inductive: frozenset[str] | None = None
    coinductive: frozenset[str] | None = None
    order: tuple[tuple[str, str, bool], ...] = ()
    max_depth: int | None = None
    max_states: int | None = None
    max_valleys: int | None = None
    assume_terminating: bool = False
    enumerate_orders: bool = False
    format: str | None = None
    tactics: tuple[tuple[str, Tactic], ...] = ()
    # (rule name or selector, line) for every reference, checked by validate()
    references: tuple[tuple[str, int], ...] = ()

    def validate(self, *programs: Program) -> None:
        names = {n for p in programs for n in p.names}
        for name, line in self.references:
            if name.startswith("peak:"):
                try:
                    parse_selector(name, names)
                except ConfigError as e:
                    raise ConfigError(e.message, line) from None
            elif name not in names:
                raise ConfigError(f"unknown rule '{name}'", line)

    def partition(self, program: Program) -> Partition:
        return Partition.for_program(program, self.inductive, self.coinductive)

    def preorder(self, partition: Partition) -> RulePreorder | None:
        if not self.order:
            return None
        return RulePreorder.of(self.order, partition.rules)

    def budget(self, defaults: Settings, max_depth: int | None = None,
               max_states: int | None = None) -> SearchBudget:
        """Command-line values win over the file, the file over the environment."""
        def pick(flag, own, env):
            return next(v for v in (flag, own, env) if v is not None)

        return SearchBudget(
            pick(max_depth, self.max_depth, defaults.max_depth),
            pick(max_states, self.max_states, defaults.max_states),
            pick(None, self.max_valleys, defaults.max_valleys),
        )

    def tactic_map(self) -> dict[str, Tactic]:
        return dict(self.tactics)


class _Reader:
    def __init__(self):
        self.section: str | None = None
        self.selector: str | None = None
        self.seen: set[tuple[str | None, str]] = set()
        self.values: dict = {}
        self.order: list[tuple[str, str, bool]] = []
        self.tactics: dict[str, tuple[list, list]] = {}
        self.references: list[tuple[str, int]] = []

    def section_header(self, name: Token) -> None:
        if str(name) not in SECTIONS or str(name) == "tactic":
            raise ConfigError(f"unknown section [{name}]", name.line)
        self.section, self.selector = str(name), None

    def tactic_header(self, name: Token, selector: Token) -> None:
        if str(name) != "tactic":
            raise ConfigError(f"only [tactic \"...\"] sections take a selector, got [{name}]", name.line)
        text = str(selector)[1:-1].strip()
        if text in self.tactics:
            raise ConfigError(f"tactic '{text}' given twice", name.line)
        self.section, self.selector = "tactic", text
        self.tactics[text] = ([], [])
        self.references.append((text, name.line))

    def assignment(self, key: Token, items: list[str]) -> None:
        line = key.line
        if self.section is None:
            raise ConfigError(f"'{key}' outside of any section", line)
        if str(key) not in _KEYS.get(self.section, ()):
            raise ConfigError(f"unknown key '{key}' in [{self.section}]", line)

        if self.section == "tactic":
            left, right = self.tactics[self.selector]
            (left if key == "left" else right).append(tuple(items))
            self.references.extend((name, line) for name in items)
            return

        if (self.section, str(key)) in self.seen:
            raise ConfigError(f"'{key}' given twice in [{self.section}]", line)
        self.seen.add((self.section, str(key)))

        if self.section == "partition":
            self.values[str(key)] = frozenset(items)
            self.references.extend((name, line) for name in items)
        elif self.section == "limits":
            self.values[str(key)] = _integer(key, items, line)
        elif key == "format":
            if len(items) != 1 or items[0] not in FORMATS:
                raise ConfigError(f"format must be one of {', '.join(FORMATS)}", line)
            self.values["format"] = items[0]
        else:
            self.values[str(key)] = _boolean(key, items, line)

    def pair(self, high: Token, low: Token, strict: bool) -> None:
        if self.section != "order":
            raise ConfigError(f"order pair '{high} {'>' if strict else '>='} {low}' outside [order]", high.line)
        self.order.append((str(high), str(low), strict))
        self.references.extend(((str(high), high.line), (str(low), low.line)))

    def result(self) -> AnalysisConfig:
        return AnalysisConfig(
            order=tuple(self.order),
            tactics=tuple((sel, (tuple(l), tuple(r))) for sel, (l, r) in self.tactics.items()),
            references=tuple(self.references),
            **self.values,
        )


def _integer(key: Token, items: list[str], line: int) -> int:
    if len(items) != 1 or not items[0].isdigit():
        raise ConfigError(f"'{key}' needs a non-negative integer", line)
    return int(items[0])


def _boolean(key: Token, items: list[str], line: int) -> bool:
    if items not in (["true"], ["false"]):
        raise ConfigError(f"'{key}' must be true or false", line)
    return items == ["true"]


def parse_config(text: str) -> AnalysisConfig:
    logger = get_logger("analysis-config")

    try:
        tree = _parser().parse(text + "\n")
    except UnexpectedInput as e:
        line = e.line if e.line and e.line > 0 else None
        logger.error(f"failed to parse config - unexpected input at line {line}")
        raise ConfigError("unexpected input", line) from None

    reader = _Reader()
    try:
        for entry in tree.children:
            if not isinstance(entry, Tree):
                continue
            kids = entry.children
            if entry.data == "section":
                reader.section_header(kids[0])
            elif entry.data == "tactic_section":
                reader.tactic_header(kids[0], kids[1])
            elif entry.data == "assignment":
                items = [str(t) for t in kids[1].children] if kids[1] is not None else []
                reader.assignment(kids[0], items)
            else:
                reader.pair(kids[0], kids[1], entry.data == "strict_pair")
        config = reader.result()
    except ConfigError as e:
        logger.error(f"invalid config - {e}")
        raise

    logger.debug(f"config with {len(config.order)} order pairs and {len(config.tactics)} tactics")
    return config


def load_config(path: str | Path | None) -> AnalysisConfig:
    if path is None:
        return AnalysisConfig()
    return parse_config(Path(path).read_text(encoding="utf-8"))

