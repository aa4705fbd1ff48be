from .closures import (
    frame_graph,
    is_conversely_well_founded,
    is_transitive,
    reachable,
    reflexive_transitive_closure,
    transitive_closure,
)
from .constructions import (
    NormalizedModel,
    adjoin_root,
    find_roots,
    generated_submodel,
    is_rooted,
    normalize_rooted,
    relabel_constants,
)
from .forcing import forces, valid_in_model
from .loader import load_model, model_from_dict
from .model import KripkeModel

__all__ = [
    "KripkeModel",
    "NormalizedModel",
    "adjoin_root",
    "find_roots",
    "forces",
    "frame_graph",
    "generated_submodel",
    "is_conversely_well_founded",
    "is_rooted",
    "is_transitive",
    "load_model",
    "model_from_dict",
    "normalize_rooted",
    "reachable",
    "reflexive_transitive_closure",
    "relabel_constants",
    "transitive_closure",
    "valid_in_model",
]
