import logging

from formulas import parse_modal
from kripke import forces, load_model

from .results import CommandResult

_logger = logging.getLogger("commands.semantics")


def check_command(model_path: str, world: int, formula_text: str) -> CommandResult:
    """Check if a world of the model forces the formula"""
    model = load_model(model_path)
    formula = parse_modal(formula_text, model.predicate_arities)
    result = forces(model, world, formula)
    _logger.info(f"World {world} {'forces' if result else 'does not force'} the formula")
    return CommandResult(
        text="true" if result else "false",
        data={"world": world, "formula": formula_text, "forces": result},
    )
