from .compilation import (
    compile_formulas,
    compile_terms,
    formula_identity_formula,
    term_identity_formula,
)
from .profile import SubstitutionProfile

__all__ = [
    "SubstitutionProfile",
    "compile_formulas",
    "compile_terms",
    "formula_identity_formula",
    "term_identity_formula",
]
