import pytest
from src.core.engine.search import reachable, run_trace
from src.core.state.state import State
from src.core.syntax.ast import FALSE
from src.core.syntax.parser import parse_state
from test.unit.corpus import load_program

@pytest.fixture
def pminus():
    return load_program("pminus.chr")

class TestReachable:
    def test_depth_zero_is_the_source(self, pminus):
        result = reachable(pminus, parse_state("p(s(X)), p(X)"), max_depth=0)

        assert len(result) == 1
        assert parse_state("p(s(X)), p(X)") in result
        assert result.truncated

    def test_duplicate_after_s_minus_within_two_steps(self, pminus):
        result = reachable(pminus, parse_state("p(s(X)), p(X)"), max_depth=2)

        assert parse_state("p(X)") in result
        assert result.derivation(parse_state("p(X)")).labels == ("s_minus", "duplicate")

    def test_depth_bound_is_respected(self, pminus):
        result = reachable(pminus, parse_state("p(s(X)), p(X)"), max_depth=1)

        assert parse_state("p(X)") not in result

    def test_exhausted_search_is_not_truncated(self, pminus):
        result = reachable(pminus, parse_state("p(s(X)), p(X)"), max_depth=5)

        assert not result.truncated

    def test_state_limit_truncates(self):
        leq = load_program("leq.chr")
        result = reachable(leq, parse_state("leq(A, B), leq(B, C), leq(C, D)"), max_depth=3, max_states=3)

        assert len(result) <= 3
        assert result.truncated

    def test_inconsistent_state_reaches_itself_only(self, pminus):
        result = reachable(pminus, State((), (FALSE,), frozenset()))

        assert len(result) == 1
        assert not result.truncated

    def test_negative_depth_is_rejected(self, pminus):
        with pytest.raises(ValueError):
            reachable(pminus, parse_state("p(X)"), max_depth=-1)

class TestRunTrace:
    def test_trace_stops_at_final_state(self, pminus):
        derivation = run_trace(pminus, parse_state("p(s(s(a))), p(a)"), 10)

        assert derivation.labels == ("s_minus", "s_minus", "duplicate")
        assert derivation.target.user_store == parse_state("p(a)").user_store
        assert derivation.fixpoint

    def test_trace_respects_step_bound(self, pminus):
        derivation = run_trace(pminus, parse_state("p(s(s(a)))"), 1)

        assert len(derivation) == 1
        assert not derivation.fixpoint

    def test_last_allowed_step_reaching_a_fixpoint(self, pminus):
        assert run_trace(pminus, parse_state("p(s(a))"), 1).fixpoint

    def test_inconsistent_state_is_a_fixpoint(self, pminus):
        derivation = run_trace(pminus, parse_state("<false>"), 5)

        assert len(derivation) == 0
        assert derivation.fixpoint
