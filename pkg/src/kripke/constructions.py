import logging
from dataclasses import dataclass
from typing import Mapping

from exceptions import NotRootedError, RootAdjunctionError, UnknownWorldError
from formulas import (
    And,
    Bot,
    Box,
    Exists,
    Forall,
    Imp,
    ModalFormula,
    Neg,
    Or,
    Pred,
    Top,
)

from .closures import reachable
from .model import KripkeModel

_logger = logging.getLogger("kripke.constructions")


def generated_submodel(model: KripkeModel, world: int) -> KripkeModel:
    """Restrict the model to the worlds reachable from 'world'"""
    if world not in model.worlds:
        raise UnknownWorldError(f"World {world} is not in the model")

    worlds = frozenset(reachable(model.worlds, model.relation, world))
    return KripkeModel(
        worlds=worlds,
        relation=frozenset(
            (source, target) for source, target in model.relation if source in worlds
        ),
        domains={w: model.domains[w] for w in worlds},
        valuation=frozenset(entry for entry in model.valuation if entry[0] in worlds),
    )


def find_roots(model: KripkeModel) -> list[int]:
    """Get the worlds from which every world is reachable"""
    return [
        world
        for world in sorted(model.worlds)
        if reachable(model.worlds, model.relation, world) == model.worlds
    ]


def is_rooted(model: KripkeModel, root: int) -> bool:
    return root in model.worlds and reachable(model.worlds, model.relation, root) == model.worlds


def adjoin_root(model: KripkeModel) -> KripkeModel:
    """Adjoin a new world 0 below the root 1. World 0 sees only world 1, has the same domain and
    forces the same atoms"""
    if 0 in model.worlds:
        raise RootAdjunctionError("World 0 is already in the model")
    if not is_rooted(model, 1):
        raise NotRootedError("The model must be rooted at world 1 to adjoin a new root")

    copied_atoms = frozenset((0, name, args) for world, name, args in model.valuation if world == 1)
    return KripkeModel(
        worlds=model.worlds | {0},
        relation=model.relation | {(0, 1)},
        domains={**model.domains, 0: model.domains[1]},
        valuation=model.valuation | copied_atoms,
    )


@dataclass(frozen=True)
class NormalizedModel:
    """A rooted model renumbered so the root is world 1 and the elements are 0, 1, ..., d with the
    root's domain first. The maps send the original numbers to the new ones"""

    model: KripkeModel
    world_map: Mapping[int, int]
    element_map: Mapping[int, int]


def normalize_rooted(model: KripkeModel, world: int) -> NormalizedModel:
    """Take the submodel generated by 'world' and renumber its worlds and elements"""
    submodel = generated_submodel(model, world)

    others = sorted(submodel.worlds - {world})
    world_map = {world: 1} | {old: new for new, old in enumerate(others, start=2)}

    root_elements = sorted(submodel.domains[world])
    all_elements = set().union(*submodel.domains.values())
    other_elements = sorted(all_elements - set(root_elements))
    element_map = {old: new for new, old in enumerate(root_elements + other_elements)}

    normalized = KripkeModel(
        worlds=frozenset(world_map.values()),
        relation=frozenset(
            (world_map[source], world_map[target]) for source, target in submodel.relation
        ),
        domains={
            world_map[w]: frozenset(element_map[element] for element in domain)
            for w, domain in submodel.domains.items()
        },
        valuation=frozenset(
            (world_map[w], name, tuple(element_map[arg] for arg in args))
            for w, name, args in submodel.valuation
        ),
    )
    _logger.debug(f"Normalized model at world {world} with world map {world_map}")
    return NormalizedModel(model=normalized, world_map=world_map, element_map=element_map)


def relabel_constants(formula: ModalFormula, element_map: Mapping[int, int]) -> ModalFormula:
    """Rename the domain constants of a modal formula"""
    match formula:
        case Top() | Bot():
            return formula
        case Pred(name, args):
            return Pred(
                name, tuple(element_map[arg] if isinstance(arg, int) else arg for arg in args)
            )
        case Neg(body):
            return Neg(relabel_constants(body, element_map))
        case Box(body):
            return Box(relabel_constants(body, element_map))
        case And(left, right):
            return And(relabel_constants(left, element_map), relabel_constants(right, element_map))
        case Or(left, right):
            return Or(relabel_constants(left, element_map), relabel_constants(right, element_map))
        case Imp(left, right):
            return Imp(relabel_constants(left, element_map), relabel_constants(right, element_map))
        case Forall(var, body):
            return Forall(var, relabel_constants(body, element_map))
        case Exists(var, body):
            return Exists(var, relabel_constants(body, element_map))
    raise TypeError(f"Not a modal formula: {formula!r}")
