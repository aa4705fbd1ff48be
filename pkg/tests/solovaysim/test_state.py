import pytest

from formulas import parse_arith
from solovaysim import Output, Procedure, SimState, Trace, Transition

FORMULA = parse_arith("0 = 0")


@pytest.fixture
def trace() -> Trace:
    transition = Transition(clock=1, world=2)
    return Trace(
        (
            SimState(),
            SimState(clock=1, outputs=(Output(0, FORMULA),)),
            SimState(
                clock=2,
                h=2,
                procedure=Procedure.two,
                transition=transition,
                outputs=(Output(0, FORMULA), Output(1, None)),
            ),
        )
    )


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"h": 1}, "can only be nonzero in the second procedure"),
        ({"procedure": Procedure.two}, "must record its transition"),
        ({"transition": Transition(0, 1)}, "must record its transition"),
    ],
)
def test_sim_state_invalid(kwargs, message):
    """'SimState' should raise a 'ValueError' when the trace value, the procedure and the
    transition don't agree"""
    with pytest.raises(ValueError, match=message):
        SimState(**kwargs)


def test_trace_properties(trace):
    """'Trace' should expose the values of 'h', the transition and the formulas output by 'g'"""
    assert trace.horizon == 2
    assert trace.h_values == [0, 0, 2]
    assert trace.final.clock == 2
    assert trace.transition == Transition(clock=1, world=2)
    assert trace.outputs == [FORMULA]


def test_trace_predicates(trace):
    """'Trace.lam' and 'Trace.pr_g' should evaluate the trace and output predicates on the trace"""
    assert trace.lam(0)
    assert trace.lam(2)
    assert not trace.lam(1)
    assert trace.pr_g(FORMULA)
    assert not trace.pr_g(parse_arith("0 = 1"))


def test_trace_to_dict(trace):
    """'Trace.to_dict' should render the trace with the formulas as text"""
    assert trace.to_dict() == {
        "horizon": 2,
        "h": [0, 0, 2],
        "transition": {"clock": 1, "world": 2},
        "lambda": [0, 2],
        "g": [{"index": 0, "formula": "0 = 0"}, {"index": 1, "formula": None}],
    }


def test_trace_to_dict_no_transition():
    """'Trace.to_dict' should give a null transition when the trace never moves"""
    data = Trace((SimState(),)).to_dict()

    assert data["transition"] is None
    assert data["g"] == []
    assert data["horizon"] == 0
