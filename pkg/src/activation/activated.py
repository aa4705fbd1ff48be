import logging
from dataclasses import dataclass

import prometheus_client

from exceptions import StageMismatchError, UnknownWorldError
from formulas import ArithFormula, Exists, Var, conjunction, disjunction
from successor import decide_successor

from .context import ActivationContext
from .partitions import AtomRelations, CandidateFamily, build_family, is_good
from .shapes import condition_entries

_logger = logging.getLogger("activation.activated")

prometheus_activation_decision_count = prometheus_client.Counter(
    "activation_decision",
    "Count of activation decisions",
)


@dataclass(frozen=True)
class ActivationSentence:
    """Sentence of zero and successor that is true exactly when some numbers witness the
    activation through the family"""

    family: CandidateFamily
    sentence: ArithFormula
    good_partitions: int


def check_request(world: int, stage_index: int, ctx: ActivationContext) -> None:
    if world not in ctx.worlds:
        raise UnknownWorldError(f"World {world} is not in the frame")
    if ctx.stage.index != stage_index:
        raise StageMismatchError(
            f"Requested stage {stage_index} but the context is at stage {ctx.stage.index}"
        )


def candidate_families(world: int, ctx: ActivationContext) -> list[CandidateFamily]:
    """Get one family per goal entry of the stage, with every entry of the world as a premise.
    Adding premises never breaks a tautological consequence and each premise slot has its own
    numbers, so the largest family is the only one that needs to be tried for each goal"""
    entries = condition_entries(ctx.stage, world, ctx)
    families = []
    for entry in entries:
        goal = entry.goal
        if goal is not None and ctx.stage.in_pool(goal):
            families.append(build_family(world, entry, entries))
    return families


def _theta_constraints(family: CandidateFamily, ctx: ActivationContext) -> list[ArithFormula]:
    return [
        ctx.theta.successor_formula(k, Var(variable))
        for slot in family.slots
        for variable, k in zip(slot.variables, slot.elements)
    ]


def family_sentence(family: CandidateFamily, ctx: ActivationContext) -> ActivationSentence:
    """Build the sentence saying that some numbers satisfying the θ constraints induce a good
    equivalence relation on the atoms of the family"""
    relations = AtomRelations(family, ctx.stage)
    good = [
        relations.partition_formula(partition)
        for partition in relations.partitions()
        if is_good(partition, family, ctx.stage)
    ]

    matrix = conjunction([*_theta_constraints(family, ctx), disjunction(good)])
    sentence: ArithFormula = matrix  # type: ignore[assignment]
    for variable in reversed(family.variables):
        sentence = Exists(variable, sentence)

    _logger.debug(
        f"World {family.world}: family with {len(family.slots)} slots has {len(good)} good "
        "relations"
    )
    return ActivationSentence(family=family, sentence=sentence, good_partitions=len(good))


def activation_sentences(
    world: int, stage_index: int, ctx: ActivationContext
) -> list[ActivationSentence]:
    """Get the sentences deciding the activation of 'world', one per goal entry"""
    check_request(world, stage_index, ctx)
    return [family_sentence(family, ctx) for family in candidate_families(world, ctx)]


def decide_activated(world: int, stage_index: int, ctx: ActivationContext) -> bool:
    """Decide if 'world' is activated at the context stage"""
    check_request(world, stage_index, ctx)
    prometheus_activation_decision_count.inc()

    for family in candidate_families(world, ctx):
        activation = family_sentence(family, ctx)
        if activation.good_partitions and decide_successor(activation.sentence):
            _logger.debug(f"World {world} is activated at stage {stage_index}")
            return True
    return False
