from solovaysim import check_trace, load_oracle, run
from utils.files import write_json_file

from .results import CommandResult


def simulate_command(
    oracle_path: str, horizon: int, trace_path: str | None = None
) -> CommandResult:
    """Run the simulation on a scripted oracle and check the trace properties"""
    oracle = load_oracle(oracle_path)
    trace = run(oracle, horizon)
    violations = check_trace(trace, oracle)

    data = {**trace.to_dict(), "violations": violations}
    if trace_path is not None:
        write_json_file(trace_path, data)

    transition = trace.transition
    lines = [
        f"horizon: {trace.horizon}",
        "transition: none"
        if transition is None
        else f"transition: world {transition.world} at clock {transition.clock}",
        f"outputs: {len(trace.outputs)}",
        f"violations: {len(violations)}",
    ]
    lines += [f"  {violation}" for violation in violations]
    return CommandResult(text="\n".join(lines), data=data)
