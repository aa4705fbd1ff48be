"""
Trace level checks of the properties of 'h' and 'g'.

The checks are finite analogues of statements about the whole run: they only look at the clocks
inside the horizon.
"""

import logging

from activation import newly_proved

from .oracle import TheoryOracle
from .state import Trace

_logger = logging.getLogger("solovaysim.trace_checks")


def _moves(trace: Trace) -> list[int]:
    """Get the clocks 'l' where 'h(l) = 0' and 'h(l + 1) ≠ 0'"""
    values = trace.h_values
    return [
        clock
        for clock in range(len(values) - 1)
        if values[clock] == 0 and values[clock + 1] != 0
    ]


def check_trace(trace: Trace, oracle: TheoryOracle) -> list[str]:
    """Get the descriptions of the properties the trace violates"""
    violations = []
    values = trace.h_values

    if values[0] != 0:
        violations.append(f"h(0) is {values[0]}, not 0")

    moves = _moves(trace)
    if len(moves) > 1:
        violations.append(f"h moves away from 0 more than once, at clocks {moves}")

    for clock in range(len(values) - 1):
        if values[clock] != 0 and values[clock + 1] != values[clock]:
            violations.append(
                f"h changes from {values[clock]} to {values[clock + 1]} at clock {clock + 1}"
            )
            break

    nonzero = sorted(set(values) - {0})
    if len(nonzero) > 1:
        violations.append(f"The trace predicate holds for several worlds: {nonzero}")

    if not moves:
        expected = {
            formula
            for clock in range(trace.horizon)
            for formula in newly_proved(oracle.stage(clock), oracle.stage(clock - 1))
        }
        if set(trace.outputs) != expected:
            violations.append("g doesn't output exactly the proved formulas")

    for clock in moves:
        if oracle.consistent_through(clock):
            violations.append(
                f"h moves at clock {clock} while the theory is consistent through that stage"
            )

    for violation in violations:
        _logger.warning(violation)
    return violations
