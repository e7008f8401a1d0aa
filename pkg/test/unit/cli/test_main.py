import pytest
from click.testing import CliRunner
from unittest.mock import patch, MagicMock
from src.cli.main import main
from src.core.analysis.report import parse_machine_report
from test.unit.corpus import fixture_path

@pytest.fixture
def runner():
    return CliRunner()

class TestPeaksCommand:
    def test_pminus_lists_one_peak(self, runner):
        result = runner.invoke(main, ["peaks", fixture_path("pminus.chr"), "--format", "machine"])

        assert result.exit_code == 0
        records = parse_machine_report(result.output)
        assert [r.kind for r in records] == ["PEAK", "VERDICT"]
        assert records[-1].get("count") == "1"

    def test_philosophers_peaks_pair_eat_with_eat(self, runner):
        result = runner.invoke(main, ["peaks", fixture_path("philos.chr"), "--format", "machine"])

        peaks = [r for r in parse_machine_report(result.output) if r.kind == "PEAK"]
        assert peaks
        assert all(r.args[1:3] == ("eat", "eat") for r in peaks)

    def test_empty_program(self, runner):
        result = runner.invoke(main, ["peaks", fixture_path("empty.chr")])

        assert result.exit_code == 0
        assert "verdict: LISTED (0 peaks" in result.output

    def test_cross_peaks_of_two_files(self, runner):
        result = runner.invoke(main, ["peaks", fixture_path("splus.chr"), fixture_path("sminus.chr"),
                                      "--format", "machine"])

        assert result.exit_code == 0
        assert parse_machine_report(result.output)[-1].get("count") == "1"

    def test_missing_file(self, runner):
        result = runner.invoke(main, ["peaks", fixture_path("nothing.chr")])

        assert result.exit_code == 2

class TestCheckCommand:
    def test_leq_decreasing_with_config(self, runner):
        result = runner.invoke(main, ["check", "--mode", "decreasing", fixture_path("leq.chr"),
                                      "--config", fixture_path("leq.cfg"), "--format", "machine"])

        assert result.exit_code == 0
        records = parse_machine_report(result.output)
        assert str(records[0]) == "TERMINATION inductive VERIFIED measure=atoms,size limitations=[builtin_store_ignored]"
        assert records[-1].args == ("rule_decreasing", "CONFLUENT")

    def test_leq_strong_fails(self, runner):
        result = runner.invoke(main, ["check", "--mode", "strong", fixture_path("leq.chr")])

        assert result.exit_code == 1
        assert "left reduct admits no step" in result.output

    def test_modular(self, runner):
        result = runner.invoke(main, ["check", "--mode", "modular", fixture_path("splus.chr"),
                                      fixture_path("sminus.chr")])

        assert result.exit_code == 0

    def test_modular_violation(self, runner):
        result = runner.invoke(main, ["check", "--mode", "modular", fixture_path("violating_p.chr"),
                                      fixture_path("violating_q.chr")])

        assert result.exit_code == 1

    def test_pminus_enumeration_exhausted(self, runner):
        result = runner.invoke(main, ["check", fixture_path("pminus.chr"),
                                      "--config", fixture_path("pminus_coinductive.cfg"), "--format", "machine"])

        assert result.exit_code == 1
        verdict = parse_machine_report(result.output)[-1]
        assert verdict.get("notes") == ("all_1_admissible_orders_exhausted",)

    def test_output_is_deterministic(self, runner):
        args = ["check", fixture_path("philos.chr"), "--config", fixture_path("philos.cfg"), "--format", "machine"]

        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_parse_error_exits_2(self, runner, tmp_path):
        broken = tmp_path / "broken.chr"
        broken.write_text("r @ p(X <=> true.")

        result = runner.invoke(main, ["check", str(broken)])

        assert result.exit_code == 2
        assert "chrdc:" in result.output

    def test_config_error_exits_2(self, runner, tmp_path):
        config = tmp_path / "bad.cfg"
        config.write_text("[partition]\ninductive = nope\n")

        result = runner.invoke(main, ["check", fixture_path("leq.chr"), "--config", str(config)])

        assert result.exit_code == 2
        assert "unknown rule 'nope' (line 2)" in result.output

    def test_wrong_number_of_files_exits_2(self, runner):
        result = runner.invoke(main, ["check", "--mode", "modular", fixture_path("leq.chr")])

        assert result.exit_code == 2

    def test_depth_flag_is_forwarded(self, runner):
        with patch("src.cli.main.run_check") as mock_check:
            mock_check.return_value = MagicMock(established=True)
            with patch("src.cli.main.emit_report"):
                result = runner.invoke(main, ["check", fixture_path("leq.chr"), "--max-depth", "2"])

        assert result.exit_code == 0
        assert mock_check.call_args.args[3:] == (2, None)

class TestRunCommand:
    def test_text_trace(self, runner):
        result = runner.invoke(main, ["run", fixture_path("pminus.chr"), "--query", "p(s(s(a))), p(a)"])

        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].startswith("0: ")
        assert [line.split()[1] for line in lines[1:-1]] == ["[s_minus]", "[s_minus]", "[duplicate]"]
        assert lines[-1] == "fixpoint after 3 steps"

    def test_machine_trace(self, runner):
        result = runner.invoke(main, ["run", fixture_path("pminus.chr"), "--query", "p(s(s(a))), p(a)",
                                      "--steps", "2", "--format", "machine"])

        records = parse_machine_report(result.output)
        assert [(r.kind, r.args) for r in records] == [("STEP", ("1", "s_minus")), ("STEP", ("2", "s_minus")),
                                                      ("TRACE", ("2",))]
        assert records[-1].get("end") == "step_limit"

    def test_inconsistent_query_reports_fixpoint(self, runner):
        result = runner.invoke(main, ["run", fixture_path("pminus.chr"), "--query", "<false>"])

        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "fixpoint after 0 steps"

    def test_bad_query(self, runner):
        result = runner.invoke(main, ["run", fixture_path("pminus.chr"), "--query", "p(("])

        assert result.exit_code == 2

class TestVersion:
    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])

        assert result.exit_code == 0
        assert "chrdc, version 1.0.0" in result.output
