from .constructions import embed_command
from .decisions import (
    activated_command,
    decide_succ_command,
    identity_formula_command,
    tc_command,
)
from .results import FALSE_EXIT_CODE, CommandResult, OutputFormat, decided
from .semantics import check_command
from .simulation import simulate_command

__all__ = [
    "FALSE_EXIT_CODE",
    "CommandResult",
    "OutputFormat",
    "activated_command",
    "check_command",
    "decide_succ_command",
    "decided",
    "embed_command",
    "identity_formula_command",
    "simulate_command",
    "tc_command",
]
