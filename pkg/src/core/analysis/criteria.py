# the four confluence criteria

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import replace

from src.config.logger import get_logger
from src.config.settings import settings
from src.core.analysis.join import join_search
from src.core.analysis.patterns import AnyPattern, ModularPattern, SingleStepPattern, StarPattern, TacticPattern
from src.core.analysis.report import Criterion, Outcome, Report
from src.core.analysis.star import matches_star
from src.core.analysis.verdict import PeakStatus, PeakVerdict, SearchBudget
from src.core.orders.partition import Partition, PeakKind
from src.core.orders.preorder import RulePreorder, candidate_orders, is_admissible
from src.core.orders.termination import TerminationStatus, check_inductive_termination
from src.core.peaks.generate import peak_census
from src.core.peaks.peak import CriticalPeak
from src.core.syntax.ast import Program

Tactic = tuple[Sequence[Sequence[str]], Sequence[Sequence[str]]]

MAX_ENUMERATED_RULES = 5


def _budget(budget: SearchBudget | None) -> SearchBudget:
    return budget if budget is not None else SearchBudget.from_settings(settings())


def _outcome(ok: bool) -> Outcome:
    return Outcome.CONFLUENT if ok else Outcome.NOT_ESTABLISHED


def check_local_confluence(program: Program, budget: SearchBudget | None = None,
                           assume_terminating: bool = False) -> Report:
    logger = get_logger("local-confluence")
    budget = _budget(budget)
    partition = Partition.all_inductive(program)

    termination = check_inductive_termination(program, partition, assume_terminating, scope="program")
    peaks, trivial = peak_census(program, program, partition)
    verdicts = tuple(join_search(program, pk, None, AnyPattern(), budget) for pk in peaks)

    ok = termination.accepted and all(v.closed for v in verdicts)
    assumptions = ("program_terminating",) if termination.status is TerminationStatus.ASSUMED else ()
    logger.info(f"local confluence: {'established' if ok else 'not established'} over {len(peaks)} peaks")
    return Report(Criterion.LOCAL, _outcome(ok), verdicts, trivial_peaks=trivial,
                  termination=termination, assumptions=assumptions)


def check_strong_confluence(program: Program, budget: SearchBudget | None = None) -> Report:
    logger = get_logger("strong-confluence")
    budget = _budget(budget)

    peaks, trivial = peak_census(program, program)
    verdicts = tuple(join_search(program, pk, None, SingleStepPattern(), budget) for pk in peaks)

    ok = all(v.closed for v in verdicts)
    logger.info(f"strong confluence: {'established' if ok else 'not established'} over {len(peaks)} peaks")
    return Report(Criterion.STRONG, _outcome(ok), verdicts, trivial_peaks=trivial)


def _close_inductive(program: Program, peak: CriticalPeak, partition: Partition, order: RulePreorder,
                     budget: SearchBudget, tactic: Tactic | None) -> PeakVerdict:
    if tactic is not None:
        verdict = join_search(program, peak, partition.inductive, TacticPattern(*tactic, order=order), budget)
        if verdict.closed:
            return replace(verdict, via_tactic=True)
    return join_search(program, peak, partition.inductive, AnyPattern(order), budget)


def _close_decreasing(program: Program, peak: CriticalPeak, order: RulePreorder,
                      budget: SearchBudget, tactic: Tactic | None) -> PeakVerdict:
    alpha, beta = peak.rules
    if tactic is not None:
        verdict = join_search(program, peak, None,
                              TacticPattern(*tactic, order=order, success=PeakStatus.DECREASING), budget)
        cert = verdict.certificate
        if cert is not None and matches_star(cert.left_closing.labels, cert.right_closing.labels,
                                             alpha, beta, order):
            return replace(verdict, via_tactic=True)
    return join_search(program, peak, None, StarPattern(alpha, beta, order), budget)


def check_rule_decreasing(program: Program, partition: Partition, order: RulePreorder | None = None,
                          budget: SearchBudget | None = None, tactics: Mapping[str, Tactic] | None = None,
                          assume_terminating: bool = False, enumerate_orders: bool = False) -> Report:
    """Admissible order, terminating inductive part, inductive peaks joinable inside the inductive part,
    coinductive peaks decreasing. An empty inductive part makes the program strongly rule-decreasing."""
    logger = get_logger("rule-decreasing")
    budget = _budget(budget)
    tactics = tactics or {}
    order = order if order is not None else RulePreorder.default_admissible(partition)

    admissibility = is_admissible(order, partition)
    termination = check_inductive_termination(program, partition, assume_terminating)
    peaks, trivial = peak_census(program, program, partition)
    coinductive = [pk for pk in peaks if pk.kind is PeakKind.COINDUCTIVE]

    def decreasing_under(o: RulePreorder) -> dict[int, PeakVerdict]:
        return {pk.index: _close_decreasing(program, pk, o, budget, tactics.get(pk.selector)) for pk in coinductive}

    co_verdicts = decreasing_under(order)
    notes: list[str] = []
    tried = 0
    if enumerate_orders and not (admissibility.ok and all(v.closed for v in co_verdicts.values())):
        if len(partition.coinductive) > MAX_ENUMERATED_RULES:
            notes.append(f"order enumeration skipped: more than {MAX_ENUMERATED_RULES} coinductive rules")
        else:
            for candidate in candidate_orders(order, partition):
                tried += 1
                attempt = decreasing_under(candidate)
                if all(v.closed for v in attempt.values()):
                    logger.info(f"order {candidate.pairs()} works after {tried} candidates")
                    order, co_verdicts = candidate, attempt
                    admissibility = is_admissible(candidate, partition)
                    break
            else:
                notes.append(f"all {tried} admissible orders exhausted")

    verdicts = []
    for pk in peaks:
        if pk.kind is PeakKind.COINDUCTIVE:
            verdicts.append(co_verdicts[pk.index])
        else:
            verdicts.append(_close_inductive(program, pk, partition, order, budget, tactics.get(pk.selector)))

    ok = admissibility.ok and termination.accepted and all(v.closed for v in verdicts)
    assumptions = ("inductive_terminating",) if termination.status is TerminationStatus.ASSUMED else ()
    strongly = ok and not partition.inductive
    logger.info(f"rule-decreasingness: {'established' if ok else 'not established'} over {len(peaks)} peaks")
    return Report(Criterion.DECREASING, _outcome(ok), tuple(verdicts), trivial_peaks=trivial,
                  termination=termination, admissibility=admissibility, order=order, partition=partition,
                  assumptions=assumptions, notes=tuple(notes), orders_tried=tried, strongly=strongly)


def check_modularity(p: Program, q: Program, budget: SearchBudget | None = None) -> Report:
    """Cross peaks of p against q must close by q-steps on the left and at most one p-step on the right."""
    logger = get_logger("modularity")
    budget = _budget(budget)
    union = p.union(q)

    peaks, trivial = peak_census(p, q)
    pattern = ModularPattern(q.names, p.names)
    verdicts = tuple(join_search(union, pk, None, pattern, budget) for pk in peaks)

    ok = all(v.closed for v in verdicts)
    logger.info(f"modularity: {'established' if ok else 'not established'} over {len(peaks)} cross peaks")
    return Report(Criterion.MODULAR, _outcome(ok), verdicts, trivial_peaks=trivial,
                  assumptions=("p_confluent", "q_confluent"))
