"""
Direct search for activation witnesses, used to cross-check the decision procedure.

The search tries every tuple of numbers up to a bound for the variables of each candidate family
and checks the tautological consequence on the instances themselves.
"""

import itertools
import logging
from dataclasses import dataclass
from math import prod

from configs import configs
from exceptions import InvalidBoundError, SearchLimitError
from formulas import max_numeral, substitute_numerals
from proptaut import tc_consequence

from .activated import candidate_families, check_request
from .context import ActivationContext
from .partitions import CandidateFamily

_logger = logging.getLogger("activation.brute_force")


@dataclass(frozen=True)
class ActivationWitness:
    family: CandidateFamily
    assignment: dict[str, int]


def brute_force_bound(world: int, ctx: ActivationContext) -> int:
    """Bound on the numbers that is enough to find a witness if there is one: values up to the
    largest numeral and 'd' plus room for each variable to take a value apart from the others"""
    numeral = max((max_numeral(formula) for formula in ctx.stage.proved), default=0)
    families = candidate_families(world, ctx)
    variables = max((len(family.variables) for family in families), default=0)
    return numeral + ctx.d + 2 + variables * (numeral + 1)


def _values(k: int, bound: int, ctx: ActivationContext) -> list[int]:
    """Get the numbers up to 'bound' that satisfy 'θ_k'"""
    return [value for value in range(bound + 1) if ctx.theta.holds(k, value)]


def _family_witness(
    family: CandidateFamily, bound: int, ctx: ActivationContext
) -> dict[str, int] | None:
    choices = [_values(k, bound, ctx) for slot in family.slots for k in slot.elements]
    size = prod(len(values) for values in choices)
    limit = configs.limits.brute_force_max_tuples
    if size > limit:
        raise SearchLimitError(
            f"Brute force search over {size} tuples is over the limit of {limit}"
        )

    variables = family.variables
    for values in itertools.product(*choices):
        assignment = dict(zip(variables, values))
        premises = list(ctx.stage.proved) + [
            substitute_numerals(slot.formula, assignment) for slot in family.premises
        ]
        if tc_consequence(premises, substitute_numerals(family.goal.formula, assignment)):
            return assignment
    return None


def brute_force_activated(
    world: int, stage_index: int, ctx: ActivationContext, bound: int
) -> ActivationWitness | None:
    """Search for a family and numbers up to 'bound' witnessing that 'world' is activated"""
    check_request(world, stage_index, ctx)
    if bound < 1:
        raise InvalidBoundError(f"The search bound must be positive, got {bound}")

    for family in candidate_families(world, ctx):
        assignment = _family_witness(family, bound, ctx)
        if assignment is not None:
            _logger.debug(f"World {world} is activated with numbers {assignment}")
            return ActivationWitness(family=family, assignment=assignment)
    return None
