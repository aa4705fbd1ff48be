from .analysis import (
    free_variables,
    is_prop_atomic,
    is_sentence,
    max_numeral,
    modal_constants,
    modal_depth,
    opaque_arities,
    predicate_arities,
    prop_atomic_subformulas,
    quantifier_rank,
    term_variables,
)
from .godel import (
    encode_term,
    formulas_up_to,
    godel_decode,
    godel_encode,
    is_formula_code,
    pair,
    unpair,
)
from .nodes import (
    RESERVED_PREFIX,
    Add,
    And,
    ArithFormula,
    Bot,
    Box,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Lt,
    ModalFormula,
    Mul,
    Neg,
    OpaqueAtom,
    Or,
    Pred,
    Quote,
    Succ,
    Term,
    Top,
    Var,
    Zero,
    conjunction,
    disjunction,
    flatten_conjunction,
    numeral,
    numeral_value,
    split_succ,
    succ_power,
)
from .parser import parse_arith, parse_modal, parse_term
from .printer import print_arith, print_modal, print_term
from .substitution import (
    fresh_variable,
    instantiate_modal,
    rename_variables,
    substitute,
    substitute_numerals,
    substitute_term,
)

__all__ = [
    "RESERVED_PREFIX",
    "Add",
    "And",
    "ArithFormula",
    "Bot",
    "Box",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "Imp",
    "Lt",
    "ModalFormula",
    "Mul",
    "Neg",
    "OpaqueAtom",
    "Or",
    "Pred",
    "Quote",
    "Succ",
    "Term",
    "Top",
    "Var",
    "Zero",
    "conjunction",
    "disjunction",
    "encode_term",
    "flatten_conjunction",
    "formulas_up_to",
    "free_variables",
    "fresh_variable",
    "godel_decode",
    "godel_encode",
    "instantiate_modal",
    "is_formula_code",
    "is_prop_atomic",
    "is_sentence",
    "max_numeral",
    "modal_constants",
    "modal_depth",
    "numeral",
    "numeral_value",
    "opaque_arities",
    "pair",
    "parse_arith",
    "parse_modal",
    "parse_term",
    "predicate_arities",
    "print_arith",
    "print_modal",
    "print_term",
    "prop_atomic_subformulas",
    "quantifier_rank",
    "rename_variables",
    "split_succ",
    "substitute",
    "substitute_numerals",
    "substitute_term",
    "succ_power",
    "term_variables",
    "unpair",
]
