from typing import Mapping

from exceptions import InvalidBoundError
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
    Term,
    Top,
    Var,
    max_numeral,
    quantifier_rank,
    split_succ,
)

from .language import check_successor_formula


def _value(term: Term, assignment: Mapping[str, int]) -> int:
    count, base = split_succ(term)
    if isinstance(base, Var):
        return assignment[base.name] + count
    return count


def _bounded_eval(formula: ArithFormula, window: int, assignment: dict[str, int]) -> bool:
    match formula:
        case Top():
            return True
        case Bot():
            return False
        case Eq(left, right):
            return _value(left, assignment) == _value(right, assignment)
        case Neg(body):
            return not _bounded_eval(body, window, assignment)
        case And(left, right):
            return _bounded_eval(left, window, assignment) and _bounded_eval(
                right, window, assignment
            )
        case Or(left, right):
            return _bounded_eval(left, window, assignment) or _bounded_eval(
                right, window, assignment
            )
        case Imp(left, right):
            return not _bounded_eval(left, window, assignment) or _bounded_eval(
                right, window, assignment
            )
        case Forall(var, body) | Exists(var, body):
            top = max(assignment.values(), default=0) + window
            values = (
                _bounded_eval(body, window, {**assignment, var: value})
                for value in range(top + 1)
            )
            return all(values) if isinstance(formula, Forall) else any(values)
    raise TypeError(f"Not a successor formula: {formula!r}")


def bounded_eval(
    formula: ArithFormula, window: int, assignment: Mapping[str, int] | None = None
) -> bool:
    """Evaluate a successor formula letting each quantifier range over '0, ..., m + window', where
    'm' is the largest value assigned when the quantifier is reached (0 at the top level)"""
    check_successor_formula(formula)
    if window < 1:
        raise InvalidBoundError(f"The window must be at least 1, got {window}")
    return _bounded_eval(formula, window, dict(assignment or {}))


def bound(formula: ArithFormula) -> int:
    """Get a window for which 'bounded_eval' agrees with truth in the naturals. A value far from
    every assigned value and from zero can always stand for any other far value, and what counts
    as far doubles with each remaining quantifier"""
    rank = quantifier_rank(formula)
    if rank == 0:
        return 1
    return (max_numeral(formula) + 1) * 2 ** (rank - 1)
