from __future__ import annotations

import re
from collections.abc import Iterable

from src.core.terms.substitution import Substitution
from src.core.terms.term import Var

RESERVED_PREFIX = "__"
_FRESH = re.compile(r"^__[A-Z](\d+)$")


def is_reserved(name: str) -> bool:
    return name.startswith(RESERVED_PREFIX)


def value_variables(value) -> frozenset[str]:
    if isinstance(value, (tuple, list, frozenset, set)):
        out: set[str] = set()
        for item in value:
            out |= value_variables(item)
        return frozenset(out)
    return value.variables()


def substitute_value(value, subst):
    if isinstance(value, tuple):
        return tuple(substitute_value(v, subst) for v in value)
    if isinstance(value, list):
        return [substitute_value(v, subst) for v in value]
    return value.substitute(subst)


class FreshNames:
    """Monotone counter on the reserved prefix, seeded above every reserved name in use."""

    def __init__(self, in_use: Iterable[str] = (), tag: str = "V"):
        self.tag = tag
        self.counter = 0
        self.in_use: set[str] = set()
        self.reserve(in_use)

    def reserve(self, names: Iterable[str]) -> None:
        for name in names:
            self.in_use.add(name)
            m = _FRESH.match(name)
            if m:
                self.counter = max(self.counter, int(m.group(1)) + 1)

    def next(self) -> str:
        while True:
            name = f"{RESERVED_PREFIX}{self.tag}{self.counter}"
            self.counter += 1
            if name not in self.in_use:
                self.in_use.add(name)
                return name


def renaming_for(names: Iterable[str], fresh: FreshNames) -> Substitution:
    return Substitution({name: Var(fresh.next()) for name in sorted(set(names))})


def rename_apart(vars_in_use: Iterable[str], value, fresh: FreshNames | None = None):
    """Alpha-variant of `value` whose variables are all fresh w.r.t. `vars_in_use`."""
    own = value_variables(value)
    if fresh is None:
        fresh = FreshNames()
    fresh.reserve(vars_in_use)
    fresh.reserve(own)
    return substitute_value(value, renaming_for(own, fresh))
