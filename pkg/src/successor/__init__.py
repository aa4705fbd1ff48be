from .decision import decide_successor
from .elimination import (
    Literal,
    dnf_to_formula,
    eliminate_exists,
    eliminate_quantifiers,
    make_literal,
    to_dnf,
)
from .evaluation import bound, bounded_eval
from .language import check_successor_formula, is_successor_formula, is_successor_term

__all__ = [
    "Literal",
    "bound",
    "bounded_eval",
    "check_successor_formula",
    "decide_successor",
    "dnf_to_formula",
    "eliminate_exists",
    "eliminate_quantifiers",
    "is_successor_formula",
    "is_successor_term",
    "make_literal",
    "to_dnf",
]
