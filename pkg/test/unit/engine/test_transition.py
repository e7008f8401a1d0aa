import numpy as np
import pytest
from src.core.engine.step import Derivation
from src.core.engine.transition import applicable_steps, apply_step, replay
from src.core.errors import ReplayError
from src.core.state.canonical import canonicalize, equivalent
from src.core.state.state import State, compose
from src.core.syntax.ast import FALSE
from src.core.syntax.parser import parse_state
from test.unit.corpus import load_program
from test.unit.generators import permuted, random_program, random_state, renamed_locals

@pytest.fixture
def leq():
    return load_program("leq.chr")

@pytest.fixture
def philos():
    return load_program("philos.chr")

class TestApplicableSteps:
    def test_leq_peak_state_has_antisymmetry_and_transitivity_steps(self, leq):
        state = parse_state("leq(X, Y), leq(Y, X)")
        steps = applicable_steps(leq, state)
        by_rule = {}
        for step in steps:
            by_rule.setdefault(step.rule_name, []).append(step)

        assert equivalent(by_rule["antisymmetry"][0].target, parse_state("X = Y # globals: X, Y"))
        assert any(equivalent(s.target, parse_state("leq(X, Y), leq(Y, X), leq(X, X)"))
                   for s in by_rule["transitivity"])
        assert "duplicate" not in by_rule

    def test_steps_follow_program_order(self, leq):
        steps = applicable_steps(leq, parse_state("leq(X, Y), leq(Y, X)"))
        order = [leq.index(s.rule_name) for s in steps]

        assert order == sorted(order)

    def test_allowed_restricts_rules(self, leq):
        steps = applicable_steps(leq, parse_state("leq(X, Y), leq(Y, X)"), allowed={"antisymmetry"})

        assert {s.rule_name for s in steps} == {"antisymmetry"}

    def test_eat_keeps_the_counter_symbolic(self, philos):
        steps = applicable_steps(philos, parse_state("frk(X), frk(Y), thk(X, Y, I)"))

        assert [s.rule_name for s in steps] == ["eat"]
        assert equivalent(steps[0].target, parse_state("eat(X, Y, I+1) # globals: X, Y, I"))

    def test_matches_are_injective(self, leq):
        steps = applicable_steps(leq, parse_state("leq(X, Y)"))

        assert [s.rule_name for s in steps] == []

    def test_inconsistent_state_has_no_steps(self, leq):
        assert applicable_steps(leq, State((), (FALSE,), frozenset())) == ()

    def test_propagation_refires_on_its_own_output(self, leq):
        state = parse_state("leq(X, Y), leq(Y, Z)")
        first = [s for s in applicable_steps(leq, state) if s.rule_name == "transitivity"][0]
        again = [s for s in applicable_steps(leq, first.target) if s.rule_name == "transitivity"]

        assert again

    def test_guard_is_checked_by_identity(self):
        from src.core.syntax.parser import parse_program

        program = parse_program("r @ p(X, Y) <=> X = Y | q(X).")

        assert applicable_steps(program, parse_state("p(A, A)"))
        assert not applicable_steps(program, parse_state("p(A, B)"))

class TestApplyStep:
    def test_apply_step_at_positions(self, leq):
        state = canonicalize(parse_state("leq(X, Y), leq(Y, X)"))
        target = apply_step(leq, state, "antisymmetry", (), (0, 1))

        assert equivalent(target, parse_state("X = Y # globals: X, Y"))

    def test_apply_step_rejects_wrong_positions(self, leq):
        state = canonicalize(parse_state("leq(X, Y), leq(Y, X)"))

        assert apply_step(leq, state, "reflexivity", (), (0,)) is None
        assert apply_step(leq, state, "antisymmetry", (), (0, 0)) is None
        assert apply_step(leq, state, "antisymmetry", (), (0, 5)) is None
        assert apply_step(leq, state, "missing", (), (0,)) is None

class TestReplay:
    def test_replay_empty_derivation_gives_source(self, leq):
        source = canonicalize(parse_state("leq(X, Y)"))

        assert replay(leq, Derivation(source)) == source

    def test_replay_rejects_renamed_rule(self, leq):
        state = parse_state("leq(X, Y), leq(Y, X)")
        step = applicable_steps(leq, state, allowed={"antisymmetry"})[0]
        corrupt = Derivation(canonicalize(state), (step.__class__(
            "reflexivity", step.matched_kept, step.matched_removed, step.unifier, step.target),))

        with pytest.raises(ReplayError) as e:
            replay(leq, corrupt)
        assert e.value.step_index == 0

    def test_replay_rejects_unknown_rule(self, leq):
        state = parse_state("leq(X, Y), leq(Y, X)")
        step = applicable_steps(leq, state)[0]
        corrupt = Derivation(canonicalize(state), (step.__class__(
            "nope", step.matched_kept, step.matched_removed, step.unifier, step.target),))

        with pytest.raises(ReplayError):
            replay(leq, corrupt)

    def test_philosophers_closing_replays(self, philos):
        state = parse_state("frk(X), frk(Y), frk(Z), thk(X, Y, I), thk(Y, Z, J)")
        derivation = Derivation(canonicalize(state))
        for label in ("eat", "thk", "eat"):
            step = [s for s in applicable_steps(philos, derivation.target) if s.rule_name == label][0]
            derivation = derivation.extend(step)

        assert derivation.labels == ("eat", "thk", "eat")
        assert equivalent(replay(philos, derivation), derivation.target)

class TestTransitionProperties:
    @pytest.fixture
    def rng(self):
        return np.random.default_rng(11)

    def test_every_step_replays(self, rng):
        checked = 0
        for _ in range(200):
            program = random_program(rng)
            state = canonicalize(random_state(rng, 3, 1))
            for step in applicable_steps(program, state)[:3]:
                replay(program, Derivation(state, (step,)))
                checked += 1
        assert checked > 0

    def test_targets_are_stable_under_equivalence(self, rng):
        for _ in range(200):
            program = random_program(rng)
            s = random_state(rng, 3, 1)
            t = permuted(rng, renamed_locals(s))
            left = sorted(step.target.sort_key() for step in applicable_steps(program, s))
            right = sorted(step.target.sort_key() for step in applicable_steps(program, t))
            assert left == right

    def test_steps_are_monotone_under_composition(self, rng):
        checked = 0
        for _ in range(200):
            program = random_program(rng)
            s1 = canonicalize(random_state(rng, 3, 1))
            context = renamed_locals(State(random_state(rng, 2, 0).user_store, (), frozenset()), "c")
            if s1.inconsistent:
                continue
            wide = compose(s1, context)
            wide_targets = [step.target for step in applicable_steps(program, wide)]
            for step in applicable_steps(program, s1)[:2]:
                expected = compose(step.target, context)
                assert any(equivalent(t, expected) for t in wide_targets)
                checked += 1
        assert checked > 0
