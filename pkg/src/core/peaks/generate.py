# critical peaks by superposition of rule heads

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations

from src.config.logger import get_logger
from src.core.orders.partition import Partition
from src.core.peaks.peak import CriticalPeak, Overlap
from src.core.state.canonical import canonicalize, equivalent
from src.core.state.state import CanonicalState, State
from src.core.syntax.ast import Atom, Equation, Falsity, Program, Rule
from src.core.terms.rename import FreshNames
from src.core.terms.term import Var, const
from src.core.terms.unify import unify


@dataclass(frozen=True)
class _Candidate:
    left_rule: str
    right_rule: str
    ancestor: CanonicalState
    left: CanonicalState
    right: CanonicalState
    overlap: Overlap
    trivial: bool


def _apart(first: Rule, second: Rule) -> Rule:
    """Rename the variables of `second` that also occur in `first`, keeping names readable."""
    taken = set(first.variables()) | set(second.variables())
    renaming = {}
    for name in sorted(second.variables() & first.variables()):
        suffix = 1
        while f"{name}{suffix}" in taken:
            suffix += 1
        renaming[name] = Var(f"{name}{suffix}")
        taken.add(f"{name}{suffix}")
    return second.substitute(renaming) if renaming else second


def _overlaps(r1: Rule, r2: Rule) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    h1, h2 = r1.heads, r2.heads
    for k in range(1, min(len(h1), len(h2)) + 1):
        for left in combinations(range(len(h1)), k):
            for right in permutations(range(len(h2)), k):
                if any(h1[i].predicate != h2[j].predicate or h1[i].arity != h2[j].arity
                       for i, j in zip(left, right)):
                    continue
                # both sides inside kept heads: neither step changes the overlap
                if all(i < len(r1.kept) for i in left) and all(j < len(r2.kept) for j in right):
                    continue
                yield left, right


def _superpose(r1: Rule, r2: Rule, left: tuple[int, ...], right: tuple[int, ...]) -> _Candidate | None:
    h1, h2 = r1.heads, r2.heads
    guards = r1.guard + r2.guard
    if any(isinstance(g, Falsity) for g in guards):
        return None
    identified = tuple(Equation(h1[i].as_term(), h2[j].as_term()) for i, j in zip(left, right))
    d = identified + guards
    sigma = unify((e.lhs, e.rhs) for e in d)
    if sigma is None:
        return None

    x = r1.head_variables() | r2.head_variables()
    h1_delta = tuple(a for i, a in enumerate(h1) if i not in left)
    h1_cap = tuple(h1[i] for i in left)
    h2_delta = tuple(a for j, a in enumerate(h2) if j not in right)

    ancestor = canonicalize(State(h1_delta + h1_cap + h2_delta, d, x))
    left_state = canonicalize(State(r1.kept + r1.user_body + h2_delta, d + r1.builtin_body, x))
    right_state = canonicalize(State(r2.kept + r2.user_body + h1_delta, d + r2.builtin_body, x))
    return _Candidate(r1.name, r2.name, ancestor, left_state, right_state,
                      Overlap(left, right, sigma), equivalent(left_state, right_state))


def _tagged(tag: str, state: CanonicalState, fresh: FreshNames) -> list[Atom]:
    if state.inconsistent:
        return [Atom(f"${tag}false")]
    ren = {v: Var(fresh.next()) for v in sorted(state.local_variables)}
    atoms = [Atom(f"${tag}", (a.substitute(ren).as_term(),)) for a in state.user_store]
    atoms += [Atom(f"${tag}=", (e.lhs, e.rhs.substitute(ren))) for e in state.residual]
    atoms += [Atom(f"${tag}g", (Var(g),)) for g in sorted(state.globals)]
    return atoms


def _peak_key(ancestor: CanonicalState, r1: str, left: CanonicalState,
              r2: str, right: CanonicalState) -> CanonicalState:
    """Canonical form of the whole triple, so equal keys mean equivalent peaks."""
    fresh = FreshNames(tag="P")
    for s in (ancestor, left, right):
        fresh.reserve(s.variables() | s.globals)
    atoms = _tagged("a", ancestor, fresh) + _tagged("l", left, fresh) + _tagged("r", right, fresh)
    atoms.append(Atom("$rules", (const(r1), const(r2))))
    return canonicalize(State(tuple(atoms), (), frozenset()))


def _candidates(p: Program, q: Program) -> Iterator[_Candidate]:
    """Deduplicated peaks between p and q in rule-pair order; a program against itself keeps one of each mirror pair."""
    same = p == q
    seen: set[CanonicalState] = set()
    for i, r1 in enumerate(p):
        for j, r2 in enumerate(q):
            if same and j < i:
                continue
            second = _apart(r1, r2)
            for left, right in _overlaps(r1, second):
                cand = _superpose(r1, second, left, right)
                if cand is None:
                    continue
                key = _peak_key(cand.ancestor, r1.name, cand.left, r2.name, cand.right)
                if same and i == j:
                    mirror = _peak_key(cand.ancestor, r2.name, cand.right, r1.name, cand.left)
                    key = min(key, mirror, key=CanonicalState.sort_key)
                if key in seen:
                    continue
                seen.add(key)
                yield cand


def _numbered(candidates: list[_Candidate], partition: Partition) -> list[CriticalPeak]:
    per_pair: dict[tuple[str, str], int] = {}
    peaks = []
    for index, cand in enumerate(candidates, start=1):
        pair = (cand.left_rule, cand.right_rule)
        per_pair[pair] = per_pair.get(pair, 0) + 1
        peaks.append(CriticalPeak(
            index, cand.left_rule, cand.right_rule, cand.ancestor, cand.left, cand.right,
            cand.overlap, partition.kind_of(*pair), per_pair[pair], cand.trivial,
        ))
    return peaks


def _default_partition(p: Program, q: Program) -> Partition:
    return Partition(frozenset(p.names) | frozenset(q.names))


def peak_census(p: Program, q: Program, partition: Partition | None = None) -> tuple[list[CriticalPeak], int]:
    """Non-trivial critical peaks between p and q, numbered, and how many trivial ones were dropped."""
    logger = get_logger("critical-peaks")
    candidates = list(_candidates(p, q))
    kept = [c for c in candidates if not c.trivial]
    peaks = _numbered(kept, partition or _default_partition(p, q))
    logger.info(f"enumerated {len(peaks)} critical peaks ({len(candidates) - len(kept)} trivial)")
    return peaks, len(candidates) - len(kept)


def critical_peaks(p: Program, q: Program, partition: Partition | None = None,
                   include_trivial: bool = False) -> list[CriticalPeak]:
    logger = get_logger("critical-peaks")
    candidates = [c for c in _candidates(p, q) if include_trivial or not c.trivial]
    peaks = _numbered(candidates, partition or _default_partition(p, q))
    logger.info(f"enumerated {len(peaks)} critical peaks over {len(p)}x{len(q)} rules")
    return peaks
