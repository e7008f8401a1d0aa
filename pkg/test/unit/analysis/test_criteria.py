import pytest
from src.core.analysis.criteria import (
    check_local_confluence,
    check_modularity,
    check_rule_decreasing,
    check_strong_confluence,
)
from src.core.analysis.report import Outcome, render_machine
from src.core.analysis.star import matches_star
from src.core.analysis.verdict import PeakStatus, SearchBudget
from src.core.engine.transition import replay
from src.core.orders.partition import Partition
from src.core.orders.preorder import RulePreorder
from src.core.orders.termination import TerminationStatus
from src.core.state.canonical import equivalent
from test.unit.corpus import load_fixture_config, load_program

BUDGET = SearchBudget()

def decreasing(program_name, config_name):
    program = load_program(program_name)
    config = load_fixture_config(config_name)
    partition = config.partition(program)
    return check_rule_decreasing(program, partition, order=config.preorder(partition), budget=BUDGET,
                                 tactics=config.tactic_map(), assume_terminating=config.assume_terminating,
                                 enumerate_orders=config.enumerate_orders)

def example_peak(report):
    return [v for v in report.verdicts if v.peak.rules == ("antisymmetry", "transitivity")
            and not v.peak.left.user_store and len(v.peak.right.user_store) == 3]

class TestRuleDecreasing:
    def test_leq_with_transitivity_coinductive(self):
        report = decreasing("leq.chr", "leq.cfg")

        assert report.outcome is Outcome.CONFLUENT
        assert report.termination.status is TerminationStatus.VERIFIED
        assert report.termination.measure == "atoms,size"
        assert report.admissibility.ok
        assert not report.strongly

    def test_leq_all_coinductive_is_strongly_decreasing(self):
        report = decreasing("leq.chr", "leq_coinductive.cfg")

        assert report.outcome is Outcome.CONFLUENT
        assert report.strongly
        assert report.verdict_name == "strongly_rule_decreasing"
        peaks = example_peak(report)
        assert peaks
        for v in peaks:
            assert v.status is PeakStatus.DECREASING
            assert v.certificate.left_closing.labels == ()
            assert v.certificate.right_closing.labels == ("reflexivity", "antisymmetry")

    def test_certificates_stay_below_peak_labels(self):
        report = decreasing("leq.chr", "leq_coinductive.cfg")

        for v in report.verdicts:
            alpha, beta = v.peak.rules
            cert = v.certificate
            assert matches_star(cert.left_closing.labels, cert.right_closing.labels, alpha, beta, report.order)

    def test_philosophers(self):
        report = decreasing("philos.chr", "philos.cfg")

        assert report.outcome is Outcome.CONFLUENT
        assert report.verdicts
        for v in report.verdicts:
            assert v.peak.rules == ("eat", "eat")
            assert v.certificate.left_closing.labels == ("thk", "eat", "thk")
            assert v.certificate.right_closing.labels == ("thk", "eat", "thk")

    def test_pminus_all_inductive(self):
        pminus = load_program("pminus.chr")
        report = check_rule_decreasing(pminus, Partition.all_inductive(pminus), budget=BUDGET)

        assert report.outcome is Outcome.CONFLUENT
        assert report.termination.status is TerminationStatus.VERIFIED
        assert len(report.verdicts) == 1

    def test_pminus_coinductive_exhausts_orders(self):
        report = decreasing("pminus.chr", "pminus_coinductive.cfg")

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert report.orders_tried == 1
        assert "all 1 admissible orders exhausted" in report.notes
        assert not report.verdicts[0].closed

    def test_pplus_inductive_termination_refuted(self):
        pplus = load_program("pplus.chr")
        report = check_rule_decreasing(pplus, Partition.all_inductive(pplus), budget=BUDGET)

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert report.termination.status is TerminationStatus.REFUTED
        assert report.termination.witness == "s_plus"

    def test_pplus_coinductive_not_decreasing(self):
        report = decreasing("pplus.chr", "pplus_coinductive.cfg")

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert len(report.verdicts) == 1
        assert not report.verdicts[0].closed

    def test_inadmissible_order(self):
        leq = load_program("leq.chr")
        partition = Partition.for_program(leq, coinductive=["transitivity"])
        order = RulePreorder.flat(leq.names)
        report = check_rule_decreasing(leq, partition, order=order, budget=BUDGET)

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert not report.admissibility.ok

    def test_tactic_closes_peak(self):
        leq = load_program("leq.chr")
        config = load_fixture_config("leq_coinductive.cfg")
        partition = config.partition(leq)
        selectors = [v.peak.selector for v in example_peak(decreasing("leq.chr", "leq_coinductive.cfg"))]
        tactics = {s: ([()], [("reflexivity", "antisymmetry")]) for s in selectors}
        report = check_rule_decreasing(leq, partition, order=config.preorder(partition), budget=BUDGET,
                                       tactics=tactics)

        assert report.outcome is Outcome.CONFLUENT
        assert all(v.via_tactic for v in report.verdicts if v.peak.selector in tactics)

class TestLocalConfluence:
    def test_pminus(self):
        report = check_local_confluence(load_program("pminus.chr"), BUDGET)

        assert report.outcome is Outcome.CONFLUENT
        assert report.termination.scope == "program"

    def test_leq_is_not_terminating(self):
        report = check_local_confluence(load_program("leq.chr"), BUDGET, assume_terminating=True)

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert report.termination.status is TerminationStatus.REFUTED

    def test_empty_program(self):
        report = check_local_confluence(load_program("empty.chr"), BUDGET)

        assert report.outcome is Outcome.CONFLUENT
        assert report.verdicts == ()

    def test_assumed_termination_is_reported(self):
        report = check_local_confluence(load_program("splus.chr"), BUDGET, assume_terminating=True)

        assert report.outcome is Outcome.CONFLUENT
        assert report.assumptions == ("program_terminating",)

class TestStrongConfluence:
    def test_program_without_peaks(self):
        report = check_strong_confluence(load_program("reflexivity.chr"), BUDGET)

        assert report.outcome is Outcome.CONFLUENT

    def test_leq_fails_on_stuck_left_reduct(self):
        report = check_strong_confluence(load_program("leq.chr"), BUDGET)

        assert report.outcome is Outcome.NOT_ESTABLISHED
        failing = example_peak(report)
        assert failing
        for v in failing:
            assert not v.closed
            assert "left reduct admits no step" in v.notes

    def test_philosophers_fail(self):
        report = check_strong_confluence(load_program("philos.chr"), BUDGET)

        assert report.outcome is Outcome.NOT_ESTABLISHED

    @pytest.mark.parametrize("name", ["empty.chr", "reflexivity.chr", "duplicate.chr", "splus.chr",
                                      "sminus.chr", "disjoint.chr", "pminus.chr", "leq.chr", "philos.chr"])
    def test_strong_implies_flat_decreasing(self, name):
        program = load_program(name)
        if check_strong_confluence(program, BUDGET).outcome is not Outcome.CONFLUENT:
            return
        report = check_rule_decreasing(program, Partition.all_coinductive(program),
                                       order=RulePreorder.flat(program.names), budget=BUDGET)

        assert report.outcome is Outcome.CONFLUENT

class TestModularity:
    @pytest.mark.parametrize("p,q", [
        ("reflexivity.chr", "duplicate.chr"),
        ("leq.chr", "disjoint.chr"),
        ("splus.chr", "sminus.chr"),
    ])
    def test_modular_unions(self, p, q):
        report = check_modularity(load_program(p), load_program(q), BUDGET)

        assert report.outcome is Outcome.CONFLUENT
        assert report.assumptions == ("p_confluent", "q_confluent")

    def test_splus_sminus_closing(self):
        splus, sminus = load_program("splus.chr"), load_program("sminus.chr")
        report = check_modularity(splus, sminus, BUDGET)

        assert len(report.verdicts) == 1
        cert = report.verdicts[0].certificate
        assert set(cert.left_closing.labels) <= {"s_minus"}
        assert len(cert.right_closing) <= 1
        union = splus.union(sminus)
        assert equivalent(replay(union, cert.left_closing), replay(union, cert.right_closing))

    def test_violating_pair(self):
        report = check_modularity(load_program("violating_p.chr"), load_program("violating_q.chr"), BUDGET)

        assert report.outcome is Outcome.NOT_ESTABLISHED
        assert [v.status for v in report.verdicts] == [PeakStatus.REFUTED]

class TestCertificates:
    @pytest.mark.parametrize("program_name,config_name", [
        ("leq.chr", "leq.cfg"),
        ("leq.chr", "leq_coinductive.cfg"),
        ("philos.chr", "philos.cfg"),
    ])
    def test_certificates_replay_to_equivalent_states(self, program_name, config_name):
        program = load_program(program_name)
        report = decreasing(program_name, config_name)

        for v in report.verdicts:
            cert = v.certificate
            assert equivalent(cert.left_closing.source, v.peak.left)
            assert equivalent(cert.right_closing.source, v.peak.right)
            assert equivalent(replay(program, cert.left_closing), replay(program, cert.right_closing))

    @pytest.mark.parametrize("program_name,config_name", [
        ("leq.chr", "leq.cfg"),
        ("leq.chr", "leq_coinductive.cfg"),
        ("philos.chr", "philos.cfg"),
        ("pminus.chr", "pminus_coinductive.cfg"),
        ("pplus.chr", "pplus_coinductive.cfg"),
    ])
    def test_reports_are_deterministic(self, program_name, config_name):
        assert render_machine(decreasing(program_name, config_name)) == render_machine(decreasing(program_name, config_name))
