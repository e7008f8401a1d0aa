# finite preorders on rule names

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from src.core.errors import ConfigError
from src.core.orders.partition import Partition


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    witness: tuple[str, str] | None = None


@dataclass(frozen=True)
class RulePreorder:
    """Reflexive-transitive closure of declared pairs `(a, b)` meaning a ≽ b.

    `strict` lists the pairs declared with `>`; they must stay strict after closure.
    """

    declared: frozenset[tuple[str, str]] = frozenset()
    strict: frozenset[tuple[str, str]] = frozenset()
    carrier: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        collapsed = sorted((a, b) for a, b in self.strict if self.geq(b, a))
        if collapsed:
            a, b = collapsed[0]
            raise ConfigError(f"order declares {a} > {b} but also implies {b} >= {a}")

    @cached_property
    def rules(self) -> frozenset[str]:
        return self.carrier | {x for pair in self.declared for x in pair}

    @cached_property
    def _closure(self) -> frozenset[tuple[str, str]]:
        rel = set(self.declared) | {(r, r) for r in self.rules}
        items = sorted(self.rules)
        for k in items:
            for i in items:
                if (i, k) not in rel:
                    continue
                for j in items:
                    if (k, j) in rel:
                        rel.add((i, j))
        return frozenset(rel)

    def geq(self, a: str, b: str) -> bool:
        return a == b or (a, b) in self._closure

    def gt(self, a: str, b: str) -> bool:
        return self.geq(a, b) and not self.geq(b, a)

    def down_strict(self, labels: Iterable[str]) -> frozenset[str]:
        labels = tuple(labels)
        return frozenset(g for g in self.rules if any(self.gt(d, g) for d in labels))

    def down_eq(self, labels: Iterable[str]) -> frozenset[str]:
        labels = tuple(labels)
        return frozenset(g for g in self.rules | set(labels) if any(self.geq(d, g) for d in labels))

    @cached_property
    def _heights(self) -> dict[str, int]:
        heights: dict[str, int] = {}

        def height(r: str) -> int:
            if r not in heights:
                below = [s for s in self.rules if self.gt(r, s)]
                heights[r] = 1 + max(height(s) for s in below) if below else 0
            return heights[r]

        for r in sorted(self.rules):
            height(r)
        return heights

    def height(self, rule: str) -> int:
        """Length of the longest strictly descending chain starting at `rule`."""
        return self._heights.get(rule, 0)

    def label_key(self, rule: str) -> tuple[int, str]:
        return (self.height(rule), rule)

    def is_wellfounded(self) -> bool:
        # finite carrier: ≻ is acyclic by construction of the strict part
        return all(not (self.gt(a, b) and self.gt(b, a)) for a in self.rules for b in self.rules)

    def pairs(self) -> list[str]:
        """Human/machine rendering: `a>b` for strict covering pairs, `a=b` for equivalences."""
        out = []
        items = sorted(self.rules)
        for a in items:
            for b in items:
                if a < b and self.geq(a, b) and self.geq(b, a):
                    out.append(f"{a}={b}")
                elif self.gt(a, b) and not any(self.gt(a, c) and self.gt(c, b) for c in items):
                    out.append(f"{a}>{b}")
        return out

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, str, bool]], carrier: Iterable[str] = ()) -> RulePreorder:
        """From `(a, b, strict)` triples, as declared by `a > b` / `a >= b`."""
        pairs = list(pairs)
        return cls(
            frozenset((a, b) for a, b, _ in pairs),
            frozenset((a, b) for a, b, s in pairs if s),
            frozenset(carrier),
        )

    @classmethod
    def flat(cls, rules: Iterable[str]) -> RulePreorder:
        """Every rule equivalent to every other one."""
        rules = sorted(set(rules))
        return cls(frozenset((a, b) for a in rules for b in rules), frozenset(), frozenset(rules))

    @classmethod
    def default_admissible(cls, partition: Partition) -> RulePreorder:
        """Each coinductive rule strictly above each inductive rule, nothing else related."""
        return cls(
            frozenset(product(sorted(partition.coinductive), sorted(partition.inductive))),
            frozenset(),
            partition.rules,
        )

    def stacked(self, partition: Partition, upper: Iterable[tuple[str, str]]) -> RulePreorder:
        """Keep this order on the inductive rules, put `upper` on the coinductive ones, above them all."""
        lower = {(a, b) for a, b in self.declared if a in partition.inductive and b in partition.inductive}
        bridge = set(product(sorted(partition.coinductive), sorted(partition.inductive)))
        lower_strict = {(a, b) for a, b in self.strict if (a, b) in lower}
        return RulePreorder(frozenset(lower | bridge | set(upper)), frozenset(lower_strict), partition.rules)


def is_admissible(order: RulePreorder, partition: Partition) -> Admissibility:
    for rc in sorted(partition.coinductive):
        for ri in sorted(partition.inductive):
            if not order.gt(rc, ri):
                return Admissibility(False, (rc, ri))
    return Admissibility(True)


def _transitive_so_far(rel: set[tuple[str, str]], items: list[str], decided: set[frozenset]) -> bool:
    for a in items:
        for b in items:
            if (a, b) not in rel:
                continue
            for c in items:
                if (b, c) in rel and (a, c) not in rel and a != c and frozenset((a, c)) in decided:
                    return False
    return True


def preorders_on(rules: Iterable[str]) -> Iterator[frozenset[tuple[str, str]]]:
    """Every preorder on `rules` (non-reflexive pairs only), in a fixed order."""
    items = sorted(set(rules))
    pairs = [(a, b) for i, a in enumerate(items) for b in items[i + 1:]]

    def extend(k: int, rel: set[tuple[str, str]], decided: set[frozenset]):
        if k == len(pairs):
            yield frozenset(rel)
            return
        a, b = pairs[k]
        for choice in ((), ((a, b),), ((b, a),), ((a, b), (b, a))):
            nxt = rel | set(choice)
            now = decided | {frozenset((a, b))}
            if _transitive_so_far(nxt, items, now):
                yield from extend(k + 1, nxt, now)

    yield from extend(0, set(), set())


def candidate_orders(base: RulePreorder, partition: Partition) -> Iterator[RulePreorder]:
    """Admissible orders: every preorder on the coinductive rules stacked over `base` on the inductive ones."""
    for upper in preorders_on(partition.coinductive):
        yield base.stacked(partition, upper)
