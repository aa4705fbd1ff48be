from .bundle import EmbeddingBundle, EmbeddingMode, ProvabilitySchema, build_embedding
from .interpretation import (
    InterpretationTable,
    PredicateInterpretation,
    argument_variables,
    interpret,
    predicate_table,
    quote,
)
from .obligations import Obligation
from .schemas import con_sequence, gamma_tau_schema, relation_formula, strict_transitive_pairs
from .theta import ThetaFamily, make_theta, verify_theta

__all__ = [
    "EmbeddingBundle",
    "EmbeddingMode",
    "InterpretationTable",
    "Obligation",
    "PredicateInterpretation",
    "ProvabilitySchema",
    "ThetaFamily",
    "argument_variables",
    "build_embedding",
    "con_sequence",
    "gamma_tau_schema",
    "interpret",
    "make_theta",
    "predicate_table",
    "quote",
    "relation_formula",
    "strict_transitive_pairs",
    "verify_theta",
]
