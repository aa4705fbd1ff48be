"""
Step by step simulation of the trace function 'h' and the output function 'g'.

In the first procedure, 'g' outputs the formulas newly proved at each stage and 'h' moves to the
least world activated at the current stage. Once 'h' moves to a world 'i' at clock 'l', the second
procedure outputs 'ξ_u' at clock 'l + u' when it is ready at 'u' for the transition, using the
theory at stage 'l - 1'.
"""

import logging
from dataclasses import replace

import prometheus_client

from activation import ActivationContext, decide_activated, decide_ready, newly_proved
from exceptions import InvalidBoundError, NonCumulativeStageError

from .oracle import TheoryOracle
from .state import Output, Procedure, SimState, Trace, Transition
from .xi import xi

_logger = logging.getLogger("solovaysim.simulator")

prometheus_simulation_step_count = prometheus_client.Counter(
    "simulation_step",
    "Count of simulation steps",
)
prometheus_h_transition_count = prometheus_client.Counter(
    "simulation_h_transition",
    "Count of transitions of the trace function",
)


def _context(oracle: TheoryOracle, stage_index: int) -> ActivationContext:
    return ActivationContext(
        worlds=oracle.worlds,
        relation=oracle.relation,
        d=oracle.d,
        stage=oracle.stage(stage_index),
        lam_name=oracle.lam_name,
    )


def _procedure_one_outputs(clock: int, oracle: TheoryOracle) -> list[Output]:
    stage = oracle.stage(clock)
    previous = oracle.stage(clock - 1)
    if not previous.proved_set <= stage.proved_set:
        raise NonCumulativeStageError(
            f"Stage {clock} drops formulas proved at stage {clock - 1}"
        )
    formulas = newly_proved(stage, previous)
    if not formulas:
        return [Output(clock, None)]
    return [Output(clock, formula) for formula in formulas]


def _activated_world(clock: int, oracle: TheoryOracle) -> int | None:
    ctx = _context(oracle, clock)
    for world in sorted(oracle.worlds):
        if decide_activated(world, clock, ctx):
            return world
    return None


def _procedure_two_output(clock: int, transition: Transition, oracle: TheoryOracle) -> Output:
    offset = clock - transition.clock
    formula = xi(offset, oracle.universe())
    ctx = _context(oracle, transition.clock - 1)
    if decide_ready(formula, offset, transition.world, transition.clock, ctx):
        return Output(clock, formula)
    return Output(clock, None)


def step(state: SimState, oracle: TheoryOracle) -> SimState:
    """Compute 'g(l)' and 'h(l + 1)' for the clock 'l' of the state"""
    prometheus_simulation_step_count.inc()
    clock = state.clock

    if state.procedure == Procedure.one:
        world = _activated_world(clock, oracle)
        if world is None:
            outputs = _procedure_one_outputs(clock, oracle)
            return replace(state, clock=clock + 1, outputs=state.outputs + tuple(outputs))

        transition = Transition(clock=clock, world=world)
        prometheus_h_transition_count.inc()
        _logger.info(f"Trace moves to world {world} at clock {clock}")
    elif state.transition is not None:
        transition = state.transition
    else:
        raise ValueError("The second procedure must record its transition")

    output = _procedure_two_output(clock, transition, oracle)
    return replace(
        state,
        clock=clock + 1,
        h=transition.world,
        procedure=Procedure.two,
        transition=transition,
        outputs=state.outputs + (output,),
    )


def run(oracle: TheoryOracle, horizon: int) -> Trace:
    """Run the simulation for 'horizon' steps from clock 0"""
    if horizon < 1:
        raise InvalidBoundError(f"The horizon must be positive, got {horizon}")

    state = SimState()
    states = [state]
    for _ in range(horizon):
        state = step(state, oracle)
        states.append(state)

    trace = Trace(tuple(states))
    _logger.debug(f"Ran {horizon} steps with {len(trace.outputs)} formulas output")
    return trace
