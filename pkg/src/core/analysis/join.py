# bounded search for valleys closing a critical peak

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass

from src.config.logger import get_logger
from src.core.analysis.patterns import Pattern, Side
from src.core.analysis.verdict import PeakStatus, PeakVerdict, SearchBudget, Valley
from src.core.engine.step import Derivation
from src.core.engine.transition import applicable_steps
from src.core.peaks.peak import CriticalPeak
from src.core.state.state import CanonicalState
from src.core.syntax.ast import Program


@dataclass
class _Closings:
    """Accepted closings from one reduct: the first (shortest, least-labeled) derivation per state."""

    reached: dict[CanonicalState, Derivation]
    truncated: bool
    stuck: bool


def _explore(program: Program, source: CanonicalState, side: Side, allowed: frozenset[str] | None,
             pattern: Pattern, budget: SearchBudget) -> _Closings:
    own_limit = pattern.max_steps(side)
    if not pattern.bounded_by_budget:
        limit = own_limit or 0
    elif own_limit is None:
        limit = budget.max_depth
    else:
        limit = min(own_limit, budget.max_depth)

    def successors(state: CanonicalState, phase: Hashable):
        steps = []
        for step in applicable_steps(program, state, allowed):
            nphase = pattern.advance(side, phase, step.rule_name)
            if nphase is not None:
                steps.append((step, nphase))
        steps.sort(key=lambda sp: (pattern.label_key(sp[0].rule_name), sp[0].target.sort_key(),
                                   sp[0].matched_kept, sp[0].matched_removed))
        return steps

    start = pattern.start(side)
    root = Derivation(source)
    reached: dict[CanonicalState, Derivation] = {}
    if pattern.accepting(side, start):
        reached[source] = root
    seen = {(source, start)}
    frontier = [(root, start)]
    truncated = False
    stuck = not applicable_steps(program, source, allowed)

    for depth in range(limit):
        nxt = []
        for d, phase in frontier:
            for step, nphase in successors(d.target, phase):
                node = (step.target, nphase)
                if node in seen:
                    continue
                if len(seen) >= budget.max_states:
                    truncated = True
                    continue
                seen.add(node)
                extended = d.extend(step)
                nxt.append((extended, nphase))
                if pattern.accepting(side, nphase) and step.target not in reached:
                    reached[step.target] = extended
        frontier = nxt
        if not frontier:
            break

    cut_by_budget = pattern.bounded_by_budget and (own_limit is None or own_limit > budget.max_depth)
    if frontier and cut_by_budget and any(successors(d.target, phase) for d, phase in frontier):
        truncated = True
    return _Closings(reached, truncated, stuck)


def _rank(valley: Valley, pattern: Pattern) -> tuple:
    left, right = valley.left_closing, valley.right_closing
    return (
        valley.length,
        tuple(pattern.label_key(l) for l in left.labels),
        tuple(pattern.label_key(l) for l in right.labels),
        left.target.sort_key(),
    )


def join_search(program: Program, peak: CriticalPeak, allowed: Iterable[str] | None,
                pattern: Pattern, budget: SearchBudget) -> PeakVerdict:
    """Close `peak` with derivations over `allowed` whose label traces the pattern accepts.

    The certificate is the valley of least total length, then least label
    sequences. A search that exhausts the space without a meeting refutes the
    pattern; one cut short by the budget leaves the peak not closed.
    """
    logger = get_logger("join-search")
    names = None if allowed is None else frozenset(allowed)

    left = _explore(program, peak.left, Side.LEFT, names, pattern, budget)
    right = _explore(program, peak.right, Side.RIGHT, names, pattern, budget)

    valleys = [Valley(dl, right.reached[s]) for s, dl in left.reached.items() if s in right.reached]
    valleys.sort(key=lambda v: _rank(v, pattern))

    if valleys:
        logger.debug(f"peak {peak.index} closed by {pattern.describe()} with labels "
                     f"{list(valleys[0].left_closing.labels)} / {list(valleys[0].right_closing.labels)}")
        keep = max(budget.max_valleys, 1)
        return PeakVerdict(peak, pattern.success, valleys[0], tuple(valleys[1:keep]))

    notes = []
    if left.stuck:
        notes.append("left reduct admits no step")
    if right.stuck:
        notes.append("right reduct admits no step")
    if left.truncated or right.truncated:
        logger.debug(f"peak {peak.index} not closed by {pattern.describe()} within budget {budget}")
        return PeakVerdict(peak, PeakStatus.NOT_CLOSED, notes=tuple(notes), budget=budget)
    logger.debug(f"peak {peak.index} refuted for {pattern.describe()}: search space exhausted")
    return PeakVerdict(peak, PeakStatus.REFUTED, notes=tuple(notes))
