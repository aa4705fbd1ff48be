import itertools
import logging
from typing import Mapping

from exceptions import FreeVariableError, ParameterOutsideDomainError, UnknownWorldError
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
    free_variables,
    modal_constants,
)

from .model import KripkeModel

_logger = logging.getLogger("kripke.forcing")


def _forces(
    model: KripkeModel, world: int, formula: ModalFormula, assignment: Mapping[str, int]
) -> bool:
    match formula:
        case Top():
            return True
        case Bot():
            return False
        case Pred(name, args):
            values = tuple(assignment[arg] if isinstance(arg, str) else arg for arg in args)
            return model.holds(world, name, values)
        case Neg(body):
            return not _forces(model, world, body, assignment)
        case And(left, right):
            return _forces(model, world, left, assignment) and _forces(
                model, world, right, assignment
            )
        case Or(left, right):
            return _forces(model, world, left, assignment) or _forces(
                model, world, right, assignment
            )
        case Imp(left, right):
            return not _forces(model, world, left, assignment) or _forces(
                model, world, right, assignment
            )
        case Box(body):
            return all(
                _forces(model, successor, body, assignment)
                for successor in model.successors(world)
            )
        case Forall(var, body):
            return all(
                _forces(model, world, body, {**assignment, var: element})
                for element in sorted(model.domains[world])
            )
        case Exists(var, body):
            return any(
                _forces(model, world, body, {**assignment, var: element})
                for element in sorted(model.domains[world])
            )
    raise TypeError(f"Not a modal formula: {formula!r}")


def forces(
    model: KripkeModel,
    world: int,
    formula: ModalFormula,
    assignment: Mapping[str, int] | None = None,
) -> bool:
    """Check if 'world' forces the formula. Quantifiers range over the domain of the world where
    they are evaluated. Free variables must be given values by 'assignment'"""
    if world not in model.worlds:
        raise UnknownWorldError(f"World {world} is not in the model")
    if assignment is None:
        assignment = {}

    free = free_variables(formula) - set(assignment)
    if free:
        raise FreeVariableError(f"Formula has free variables {sorted(free)}")

    outside = (modal_constants(formula) | set(assignment.values())) - model.domains[world]
    if outside:
        raise ParameterOutsideDomainError(
            f"Parameters {sorted(outside)} are not in the domain of world {world}"
        )

    return _forces(model, world, formula, assignment)


def valid_in_model(model: KripkeModel, formula: ModalFormula) -> bool:
    """Check if the formula is forced at every world, for every value of its free variables taken
    from the domain of that world"""
    variables = sorted(free_variables(formula))
    constants = modal_constants(formula)
    for world in sorted(model.worlds):
        domain = model.domains[world]
        # Worlds that can't interpret the constants are skipped
        if not constants <= domain:
            continue
        for values in itertools.product(sorted(domain), repeat=len(variables)):
            if not _forces(model, world, formula, dict(zip(variables, values))):
                _logger.debug(f"Formula fails at world {world} with values {values}")
                return False
    return True
