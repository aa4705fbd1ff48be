from .oracle import (
    Injection,
    ScriptedOracle,
    TheoryOracle,
    contradiction,
    load_oracle,
    oracle_from_file_data,
)
from .scenarios import (
    ModusPonensScenario,
    consistent_oracle,
    cumulative_snapshots,
    injected_oracle,
    modus_ponens_scenario,
)
from .simulator import run, step
from .state import Output, Procedure, SimState, Trace, Transition
from .trace_checks import check_trace
from .xi import recurrence_index, xi

__all__ = [
    "Injection",
    "ModusPonensScenario",
    "Output",
    "Procedure",
    "ScriptedOracle",
    "SimState",
    "TheoryOracle",
    "Trace",
    "Transition",
    "check_trace",
    "consistent_oracle",
    "contradiction",
    "cumulative_snapshots",
    "injected_oracle",
    "load_oracle",
    "modus_ponens_scenario",
    "oracle_from_file_data",
    "recurrence_index",
    "run",
    "step",
    "xi",
]
