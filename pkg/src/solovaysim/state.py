import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from formulas import ArithFormula, print_arith


class Procedure(enum.Enum):
    one = "one"
    two = "two"


@dataclass(frozen=True)
class Transition:
    """The trace predicate moved from 0 to 'world' between 'clock' and 'clock + 1'"""

    clock: int
    world: int


@dataclass(frozen=True)
class Output:
    """Value of 'g' at 'index'. 'None' stands for 0, no formula"""

    index: int
    formula: ArithFormula | None


@dataclass(frozen=True)
class SimState:
    """State at the start of 'clock'. 'h' is 'h(clock)' and 'outputs' the values of 'g' before
    'clock'"""

    clock: int = 0
    h: int = 0
    procedure: Procedure = Procedure.one
    transition: Transition | None = None
    outputs: tuple[Output, ...] = ()

    def __post_init__(self) -> None:
        if self.h != 0 and self.procedure != Procedure.two:
            raise ValueError("The trace predicate can only be nonzero in the second procedure")
        if (self.procedure == Procedure.two) != (self.transition is not None):
            raise ValueError("The second procedure must record its transition")


@dataclass(frozen=True)
class Trace:
    states: tuple[SimState, ...] = field(default_factory=tuple)

    @property
    def horizon(self) -> int:
        return len(self.states) - 1

    @cached_property
    def h_values(self) -> list[int]:
        return [state.h for state in self.states]

    @property
    def final(self) -> SimState:
        return self.states[-1]

    @property
    def transition(self) -> Transition | None:
        return self.final.transition

    @cached_property
    def outputs(self) -> list[ArithFormula]:
        """Get the formulas output by 'g', in output order"""
        return [output.formula for output in self.final.outputs if output.formula is not None]

    def lam(self, world: int) -> bool:
        """Check if the trace predicate takes the value 'world' somewhere in the trace"""
        return world in self.h_values

    def pr_g(self, formula: ArithFormula) -> bool:
        return formula in self.outputs

    def to_dict(self) -> dict[str, Any]:
        transition = self.transition
        return {
            "horizon": self.horizon,
            "h": self.h_values,
            "transition": (
                None
                if transition is None
                else {"clock": transition.clock, "world": transition.world}
            ),
            "lambda": sorted(set(self.h_values)),
            "g": [
                {
                    "index": output.index,
                    "formula": None if output.formula is None else print_arith(output.formula),
                }
                for output in self.final.outputs
            ],
        }
