from exceptions import NotSuccessorFormulaError
from formulas import (
    And,
    ArithFormula,
    Bot,
    Eq,
    Exists,
    Forall,
    Imp,
    Neg,
    Or,
    Succ,
    Term,
    Top,
    Var,
    Zero,
    print_arith,
)


def is_successor_term(term: Term) -> bool:
    match term:
        case Zero() | Var():
            return True
        case Succ(arg):
            return is_successor_term(arg)
    return False


def _first_violation(formula: ArithFormula) -> ArithFormula | None:
    match formula:
        case Top() | Bot():
            return None
        case Eq(left, right):
            if is_successor_term(left) and is_successor_term(right):
                return None
            return formula
        case Neg(body) | Forall(_, body) | Exists(_, body):
            return _first_violation(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            return _first_violation(left) or _first_violation(right)
    return formula


def is_successor_formula(formula: ArithFormula) -> bool:
    """Check if the formula only uses '0', 's' and '='"""
    return _first_violation(formula) is None


def check_successor_formula(formula: ArithFormula) -> None:
    """Raise 'NotSuccessorFormulaError' if the formula uses symbols outside '0', 's' and '='"""
    violation = _first_violation(formula)
    if violation is not None:
        raise NotSuccessorFormulaError(
            f"'{print_arith(violation)}' is not in the language of zero and successor"
        )
