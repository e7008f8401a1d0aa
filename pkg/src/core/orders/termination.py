# (number of atoms, term size) measure for the inductive part, predicate ranks as a fallback

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from graphlib import CycleError, TopologicalSorter

from src.config.logger import get_logger
from src.core.orders.partition import Partition
from src.core.syntax.ast import Atom, Equation, Program, Rule
from src.core.terms.term import occurrences, symbol_count

MEASURE = "atoms,size"
RANK_MEASURE = "predicate_rank"
# the built-in store never enters either measure
BUILTINS_IGNORED = "builtin_store_ignored"


class TerminationStatus(Enum):
    VERIFIED = "VERIFIED"
    ASSUMED = "ASSUMED"
    REFUTED = "REFUTED"


@dataclass(frozen=True)
class TerminationResult:
    status: TerminationStatus
    witness: str | None = None
    unverified: tuple[str, ...] = ()
    scope: str = "inductive"
    measure: str = MEASURE
    limitations: tuple[str, ...] = ()

    @property
    def accepted(self) -> bool:
        return self.status is not TerminationStatus.REFUTED


def _size_profile(atoms: tuple[Atom, ...], head_vars: frozenset[str]) -> tuple[int, dict[str, int]]:
    """Constant part of the term size and the multiplicity of each head variable."""
    constant = len(atoms)
    counts: dict[str, int] = {}
    for atom in atoms:
        for arg in atom.args:
            constant += symbol_count(arg)
            occurrences(arg, counts)
    shared = {v: n for v, n in counts.items() if v in head_vars}
    # variables introduced by the body are unbound, size 1 each
    constant += sum(n for v, n in counts.items() if v not in head_vars)
    return constant, shared


def _binds_body(rule: Rule, head_vars: frozenset[str]) -> bool:
    """Equations in the body, or guard variables reused by the body, can grow terms the measure sees."""
    if any(isinstance(b, Equation) for b in rule.builtin_body):
        return True
    guarded = frozenset(v for g in rule.guard for v in g.variables()) - head_vars
    return any(guarded & a.variables() for a in rule.user_body)


def decreases(rule: Rule) -> bool:
    """True when every instance of `rule` strictly decreases (atoms, size) lexicographically."""
    if len(rule.user_body) < len(rule.removed):
        return True
    if len(rule.user_body) > len(rule.removed):
        return False
    head_vars = rule.head_variables()
    if _binds_body(rule, head_vars):
        return False
    head_const, head_occ = _size_profile(rule.removed, head_vars)
    body_const, body_occ = _size_profile(rule.user_body, head_vars)
    if any(n > head_occ.get(v, 0) for v, n in body_occ.items()):
        return False
    # worst case: every head variable bound to a term of size 1
    head_total = head_const + sum(head_occ.values())
    body_total = body_const + sum(body_occ.values())
    return body_total < head_total


def ranked_by_predicates(rules: Iterable[Rule]) -> bool:
    """True when removed predicates sit strictly above body predicates in some acyclic ranking.

    Each step then trades removed atoms for atoms of lower rank, a multiset decrease.
    """
    graph: dict[tuple[str, int], set[tuple[str, int]]] = {}
    for rule in rules:
        for head in rule.removed:
            below = graph.setdefault((head.predicate, len(head.args)), set())
            below.update((b.predicate, len(b.args)) for b in rule.user_body)
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return False
    return True


def check_inductive_termination(program: Program, partition: Partition,
                                assume_terminating: bool = False, scope: str = "inductive") -> TerminationResult:
    logger = get_logger("termination")
    failing: list[str] = []

    for rule in program:
        if rule.name not in partition.inductive:
            continue
        if not rule.removed:
            # re-fires on its own output forever
            logger.info(f"propagation rule {rule.name} never terminates")
            return TerminationResult(TerminationStatus.REFUTED, rule.name, scope=scope)
        if not decreases(rule):
            failing.append(rule.name)

    if not failing:
        logger.info(f"{scope} part verified terminating by the {MEASURE} measure")
        return TerminationResult(TerminationStatus.VERIFIED, scope=scope, limitations=(BUILTINS_IGNORED,))
    if ranked_by_predicates(r for r in program if r.name in partition.inductive):
        logger.info(f"{scope} part verified terminating by the {RANK_MEASURE} measure")
        return TerminationResult(TerminationStatus.VERIFIED, scope=scope, measure=RANK_MEASURE,
                                 limitations=(BUILTINS_IGNORED,))
    if assume_terminating:
        logger.info(f"termination assumed for {', '.join(failing)}")
        return TerminationResult(TerminationStatus.ASSUMED, unverified=tuple(failing), scope=scope)
    return TerminationResult(TerminationStatus.REFUTED, failing[0], tuple(failing), scope=scope)
