import logging
from pathlib import Path

from pydantic import ValidationError

from data_models.context_file import ContextFile
from data_models.oracle_file import StageItem
from exceptions import InputFileError
from formulas import parse_arith
from kripke.loader import model_from_file_data
from utils.exception_handling import log_validation_error
from utils.files import read_json_file

from .context import ActivationContext
from .stage import ExplicitPool, GodelPool, Pool, TheoryStage

_logger = logging.getLogger("activation.loader")


def pool_from_item(item: StageItem) -> Pool | None:
    if item.pool is not None:
        return ExplicitPool(tuple(parse_arith(text) for text in item.pool))
    if item.pool_height is not None:
        return GodelPool(item.pool_height)
    return None


def stage_from_item(item: StageItem) -> TheoryStage:
    return TheoryStage.build(
        item.index, [parse_arith(text) for text in item.proved], pool_from_item(item)
    )


def load_context(path: str | Path) -> ActivationContext:
    """Load an activation context from a JSON context file"""
    data = read_json_file(path)
    if not isinstance(data, dict):
        raise InputFileError(str(path), "a context file must contain a JSON object")

    try:
        context_file = ContextFile(**data)
    except ValidationError as e:
        log_validation_error(_logger, e)
        raise InputFileError(str(path), "invalid context file") from e
    except TypeError as e:
        raise InputFileError(str(path), f"invalid context file: {e}") from e

    model = model_from_file_data(context_file.model)
    ctx = ActivationContext.from_model(model, stage_from_item(context_file.stage), context_file.lam)
    _logger.debug(
        f"Loaded context at stage {ctx.stage.index} with {len(ctx.stage.proved)} formulas from "
        f"'{path}'"
    )
    return ctx
