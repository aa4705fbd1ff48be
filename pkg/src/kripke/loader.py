import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from data_models.model_file import ModelFile
from exceptions import InputFileError
from utils.exception_handling import log_validation_error
from utils.files import read_json_file

from .model import KripkeModel

_logger = logging.getLogger("kripke.loader")


def model_from_file_data(model_file: ModelFile) -> KripkeModel:
    domains: dict[int, list[int]] | list[int]
    if model_file.domains is not None:
        domains = model_file.domains
    else:
        domains = model_file.domain or []

    return KripkeModel.build(
        worlds=model_file.worlds,
        relation=model_file.relation,
        domains=domains,
        valuation=[(item.world, item.pred, item.args) for item in model_file.valuation],
    )


def model_from_dict(data: dict[str, Any]) -> KripkeModel:
    """Build a model from the content of a JSON model file"""
    return model_from_file_data(ModelFile(**data))


def load_model(path: str | Path) -> KripkeModel:
    """Load a model from a JSON model file"""
    data = read_json_file(path)
    if not isinstance(data, dict):
        raise InputFileError(str(path), "a model file must contain a JSON object")

    try:
        model_file = ModelFile(**data)
    except ValidationError as e:
        log_validation_error(_logger, e)
        raise InputFileError(str(path), "invalid model file") from e
    except TypeError as e:
        raise InputFileError(str(path), f"invalid model file: {e}") from e

    model = model_from_file_data(model_file)
    _logger.debug(f"Loaded model with {len(model.worlds)} worlds from '{path}'")
    return model
