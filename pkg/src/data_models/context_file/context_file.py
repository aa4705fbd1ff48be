from pydantic.dataclasses import dataclass

from data_models.model_file import ModelFile
from data_models.oracle_file import StageItem


@dataclass
class ContextFile:
    """
    JSON description of an activation context.
    - `model`: Kripke model whose elements are `0, ..., d`. Only its frame and `d` are used.
    - `stage`: the theory stage, in the same format as the oracle file stages.
    - `lam`: name of the trace predicate atom. Defaults to `atom_names.lam` in `configs.yaml`.
    """

    model: ModelFile
    stage: StageItem
    lam: str | None = None
