from .tautology import (
    evaluate,
    is_satisfiable,
    is_tautology,
    jointly_satisfiable,
    prop_variables,
    tc_consequence,
)
from .translation import (
    PAnd,
    PBot,
    PImp,
    PNeg,
    POr,
    PropFormula,
    PTop,
    PVar,
    atom_key,
    translate,
    translate_i,
)

__all__ = [
    "PAnd",
    "PBot",
    "PImp",
    "PNeg",
    "POr",
    "PTop",
    "PVar",
    "PropFormula",
    "atom_key",
    "evaluate",
    "is_satisfiable",
    "is_tautology",
    "jointly_satisfiable",
    "prop_variables",
    "tc_consequence",
    "translate",
    "translate_i",
]
