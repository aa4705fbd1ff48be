from dataclasses import dataclass

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from activation import TheoryStage
from exceptions import InvalidBoundError, NonCumulativeStageError
from formulas import ArithFormula, parse_arith
from solovaysim import (
    Output,
    Procedure,
    SimState,
    Transition,
    check_trace,
    consistent_oracle,
    contradiction,
    injected_oracle,
    run,
    step,
)
from tests.strategies import scripted_oracles
from tests.test_utils import assert_message_in_log

F1 = parse_arith("1 = 0")
F2 = parse_arith("1 = 0 -> 2 = 0")
F3 = parse_arith("~3 = 0")


@dataclass
class AlternatingOracle:
    """Proves a formula at the even stages only"""

    worlds: frozenset[int] = frozenset({1})
    relation: frozenset[tuple[int, int]] = frozenset()
    d: int = 0
    lam_name: str = "Lam"

    def stage(self, index: int) -> TheoryStage:
        return TheoryStage(index, (F1,) if index % 2 == 0 else ())

    def universe(self) -> list[ArithFormula] | None:
        return None

    def consistent_through(self, index: int) -> bool:
        return True


def test_step_procedure_one():
    """'step' should output the newly proved formulas while no world is activated"""
    oracle = consistent_oracle([1, 2], [(1, 2)], 0, [F1, F2], every=2)

    state = step(SimState(), oracle)
    assert state == SimState(clock=1, outputs=(Output(0, F1),))

    state = step(state, oracle)
    assert state.outputs[-1] == Output(1, None)
    assert state.procedure == Procedure.one


def test_step_transition(caplog):
    """'step' should move the trace to the least activated world and switch to the second
    procedure"""
    oracle = injected_oracle([1, 2], [(1, 2)], 0, [F1], stage=1, injected_worlds=[2, 1])

    state = step(step(SimState(), oracle), oracle)
    assert state.clock == 2
    assert state.h == 1
    assert state.procedure == Procedure.two
    assert state.transition == Transition(clock=1, world=1)
    assert_message_in_log(caplog, "Trace moves to world 1 at clock 1")

    following = step(state, oracle)
    assert following.h == 1
    assert following.transition == state.transition
    assert following.outputs[-1].index == 2


def test_step_not_cumulative():
    """'step' should raise a 'NonCumulativeStageError' when a stage drops proved formulas"""
    oracle = AlternatingOracle()
    state = step(SimState(), oracle)

    with pytest.raises(NonCumulativeStageError, match="Stage 1 drops formulas proved at stage 0"):
        step(state, oracle)


def test_run_consistent():
    """'run' should output exactly the proved formulas and keep the trace at 0 for a consistent
    theory"""
    oracle = consistent_oracle([1, 2], [(1, 2)], 0, [F1, F2, F3], every=2)
    trace = run(oracle, 6)

    assert trace.horizon == 6
    assert trace.h_values == [0] * 7
    assert trace.transition is None
    assert trace.outputs == [F1, F2, F3]
    assert [output.index for output in trace.final.outputs] == list(range(6))
    assert check_trace(trace, oracle) == []


def test_run_injected():
    """'run' should move the trace at the injection stage and keep it there"""
    oracle = injected_oracle([1, 2], [(1, 2)], 0, [F1], stage=2, injected_worlds=[2])
    trace = run(oracle, 5)

    assert trace.h_values == [0, 0, 0, 2, 2, 2]
    assert trace.transition == Transition(clock=2, world=2)
    assert trace.outputs[0] == F1
    assert contradiction() not in trace.outputs
    assert check_trace(trace, oracle) == []


def test_run_injected_without_worlds():
    """'run' should output the contradiction when it activates no world"""
    oracle = injected_oracle([1, 2], [(1, 2)], 0, [F1], stage=1, injected_worlds=[])
    trace = run(oracle, 3)

    assert trace.transition is None
    assert trace.outputs == [F1, contradiction()]
    assert check_trace(trace, oracle) == []


def test_run_invalid_horizon():
    """'run' should raise an 'InvalidBoundError' when the horizon is not positive"""
    oracle = consistent_oracle([1], [], 0, [F1])

    with pytest.raises(InvalidBoundError, match="The horizon must be positive, got 0"):
        run(oracle, 0)


def _check_run(oracle, horizon):
    trace = run(oracle, horizon)

    assert check_trace(trace, oracle) == []

    injection = oracle.injection
    if injection is not None and injection.worlds and injection.stage < horizon:
        assert trace.transition == Transition(injection.stage, min(injection.worlds))
    else:
        assert trace.transition is None


@settings(max_examples=30)
@given(scripted_oracles(), st.integers(1, 10))
def test_run_trace_properties(oracle, horizon):
    """Every run should start at 0, move at most once, only move after the theory becomes
    inconsistent and output the proved formulas while it doesn't move"""
    _check_run(oracle, horizon)


@pytest.mark.acceptance
@settings(max_examples=100)
@given(scripted_oracles(max_stage=200), st.integers(1, 200))
def test_run_trace_properties_long_horizons(oracle, horizon):
    """Every run over horizons up to 200 should have the properties of the short runs"""
    _check_run(oracle, horizon)
