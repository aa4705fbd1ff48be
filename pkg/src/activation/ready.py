import itertools
import logging
from dataclasses import dataclass

import prometheus_client

from configs import configs
from exceptions import (
    InvalidBoundError,
    SearchLimitError,
    StageMismatchError,
    UnknownWorldError,
)
from formulas import ArithFormula, free_variables, substitute_numerals
from proptaut import tc_consequence

from .context import ActivationContext
from .shapes import condition_entries

_logger = logging.getLogger("activation.ready")

prometheus_ready_decision_count = prometheus_client.Counter(
    "activation_ready_decision",
    "Count of readiness decisions",
)


@dataclass(frozen=True)
class ReadyCandidate:
    """A formula whose instances may be used as premises, with its variables bound to domain
    elements. Elements are 'None' when any element may be chosen"""

    formula: ArithFormula
    variables: tuple[str, ...]
    elements: tuple[int, ...] | None


def ready_candidates(world: int, ctx: ActivationContext) -> list[ReadyCandidate] | None:
    """Get the formulas whose condition entries are proved for every successor of 'world'. 'None'
    means every formula of the pool is a candidate, which is the case when the world has no
    successors"""
    successors = ctx.successors(world)
    if not successors:
        return None

    keys: list[tuple[ArithFormula, tuple[str, ...], tuple[int, ...]]] | None = None
    for successor in successors:
        found = {
            (entry.consequent, entry.variables, entry.elements): None
            for entry in condition_entries(ctx.stage, successor, ctx)
        }
        keys = list(found) if keys is None else [key for key in keys if key in found]
    return [ReadyCandidate(*key) for key in keys or []]


def _pool_candidates(ctx: ActivationContext) -> list[ReadyCandidate] | None:
    if ctx.stage.pool is None:
        return None
    return [
        ReadyCandidate(formula, tuple(sorted(free_variables(formula))), None)
        for formula in ctx.stage.pool.members()
    ]


def _instances(
    candidates: list[ReadyCandidate], bound: int, ctx: ActivationContext
) -> list[ArithFormula]:
    """Get every instance of the candidates with values at most 'bound' that satisfy the θ
    formulas of their elements"""
    size = sum((bound + 1) ** len(candidate.variables) for candidate in candidates)
    limit = configs.limits.brute_force_max_tuples
    if size > limit:
        raise SearchLimitError(
            f"Readiness search over {size} instances is over the limit of {limit}"
        )

    instances: dict[ArithFormula, None] = {}
    for candidate in candidates:
        for values in itertools.product(range(bound + 1), repeat=len(candidate.variables)):
            if candidate.elements is not None and not all(
                ctx.theta.holds(k, value) for k, value in zip(candidate.elements, values)
            ):
                continue
            values_map = dict(zip(candidate.variables, values))
            instances.setdefault(substitute_numerals(candidate.formula, values_map), None)
    return list(instances)


def decide_ready(
    formula: ArithFormula, offset: int, world: int, transition: int, ctx: ActivationContext
) -> bool:
    """Decide if 'formula' is ready at 'offset' after the trace predicate moved to 'world' at
    stage 'transition'. The context must hold the stage before the transition.

    Every candidate may be used any number of times with different numbers, and more premises
    never break a tautological consequence, so it's enough to check the consequence from all the
    instances with numbers up to 'offset' at once"""
    if world not in ctx.worlds:
        raise UnknownWorldError(f"World {world} is not in the frame")
    if ctx.stage.index != transition - 1:
        raise StageMismatchError(
            f"Readiness after the transition at stage {transition} needs stage {transition - 1}, "
            f"but the context is at stage {ctx.stage.index}"
        )
    if offset < 0:
        raise InvalidBoundError(f"The offset must be a natural, got {offset}")

    prometheus_ready_decision_count.inc()

    candidates = ready_candidates(world, ctx)
    if candidates is None:
        # Without successors the condition on the candidates is vacuous
        candidates = _pool_candidates(ctx)
        if candidates is None:
            # An unrestricted pool has '⊥' as a candidate
            return True

    premises = list(ctx.stage.proved) + _instances(candidates, offset, ctx)
    result = tc_consequence(premises, formula)
    _logger.debug(f"Readiness at offset {offset} from {len(premises)} premises: {result}")
    return result
