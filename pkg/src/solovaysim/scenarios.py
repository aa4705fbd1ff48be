"""
Oracles for the simulation scenarios.

The consistent oracles never prove a formula mentioning the trace predicate, so no world is ever
activated. The injected oracles add a contradiction from a given stage on.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from activation import ExplicitPool, TheoryStage
from configs import configs
from exceptions import InvalidBoundError, ScenarioError
from formulas import ArithFormula, Eq, Imp, Neg, OpaqueAtom, Zero, numeral, opaque_arities

from .oracle import Injection, ScriptedOracle
from .xi import recurrence_index


def cumulative_snapshots(
    formulas: Sequence[ArithFormula], every: int = 1, pool: ExplicitPool | None = None
) -> tuple[TheoryStage, ...]:
    """Prove one more formula each 'every' stages, starting at stage 0"""
    if every < 1:
        raise InvalidBoundError(f"Stages must be at least 1 apart, got {every}")
    return tuple(
        TheoryStage.build(position * every, formulas[: position + 1], pool)
        for position in range(len(formulas))
    )


def consistent_oracle(
    worlds: Iterable[int],
    relation: Iterable[tuple[int, int]],
    d: int,
    formulas: Sequence[ArithFormula],
    every: int = 1,
    explicit_pool: bool = True,
) -> ScriptedOracle:
    lam_name = configs.atom_names.lam
    if any(lam_name in opaque_arities(formula) for formula in formulas):
        raise ScenarioError("The formulas of a consistent oracle can't mention the trace predicate")

    pool = ExplicitPool(tuple(formulas)) if explicit_pool else None
    return ScriptedOracle(
        worlds=frozenset(worlds),
        relation=frozenset(relation),
        d=d,
        snapshots=cumulative_snapshots(formulas, every, pool),
        lam_name=lam_name,
    )


def injected_oracle(
    worlds: Iterable[int],
    relation: Iterable[tuple[int, int]],
    d: int,
    formulas: Sequence[ArithFormula],
    stage: int,
    injected_worlds: Iterable[int],
    every: int = 1,
) -> ScriptedOracle:
    """Consistent oracle that also proves '0 = 1' and the activation conditions of
    'injected_worlds' from 'stage' on"""
    oracle = consistent_oracle(worlds, relation, d, formulas, every)
    return ScriptedOracle(
        worlds=oracle.worlds,
        relation=oracle.relation,
        d=d,
        snapshots=oracle.snapshots,
        injection=Injection(stage=stage, worlds=tuple(sorted(set(injected_worlds)))),
        lam_name=oracle.lam_name,
    )


@dataclass(frozen=True)
class ModusPonensScenario:
    """Oracle where the world 1 sees world 2 and the theory proves 'λ(2) → (α_0 → α_1)' and
    'λ(2) → α_0' before the trace moves to world 1. 'α_1' is then ready at every offset and 'g'
    outputs it once 'ξ' reaches it"""

    oracle: ScriptedOracle
    antecedent: ArithFormula
    consequent: ArithFormula
    transition: int
    horizon: int


def modus_ponens_scenario(
    antecedent: ArithFormula | None = None,
    consequent: ArithFormula | None = None,
    transition: int = 1,
) -> ModusPonensScenario:
    if transition < 1:
        raise InvalidBoundError(f"The trace must move after stage 0, got {transition}")
    if antecedent is None:
        antecedent = Eq(numeral(1), Zero())
    if consequent is None:
        consequent = Eq(numeral(2), Zero())
    if isinstance(antecedent, Neg):
        raise ScenarioError("The antecedent can't be a negation, its condition would activate world 2")

    lam_name = configs.atom_names.lam
    lam_two = OpaqueAtom(lam_name, (numeral(2),))
    conditional = Imp(antecedent, consequent)
    proved = (Imp(lam_two, conditional), Imp(lam_two, antecedent))
    pool = ExplicitPool(proved)

    oracle = ScriptedOracle(
        worlds=frozenset({1, 2}),
        relation=frozenset({(1, 2)}),
        d=0,
        snapshots=(TheoryStage.build(0, proved, pool),),
        injection=Injection(stage=transition, worlds=(1,)),
        lam_name=lam_name,
    )

    universe = oracle.universe() or []
    offset = recurrence_index(consequent, 0, universe)
    if offset is None:
        raise ScenarioError("The consequent is not in the universe of the oracle")
    return ModusPonensScenario(
        oracle=oracle,
        antecedent=antecedent,
        consequent=consequent,
        transition=transition,
        horizon=transition + offset + 1,
    )
