import pytest

from exceptions import NotSuccessorFormulaError
from formulas import Add, Mul, Quote, Succ, Top, Var, Zero, parse_arith
from successor import check_successor_formula, is_successor_formula, is_successor_term


@pytest.mark.parametrize(
    "term, expected",
    [
        (Zero(), True),
        (Succ(Succ(Var("x"))), True),
        (Add(Var("x"), Zero()), False),
        (Succ(Mul(Var("x"), Var("y"))), False),
        (Quote(Top()), False),
    ],
)
def test_is_successor_term(term, expected):
    """'is_successor_term' should accept only zero and variables under successors"""
    assert is_successor_term(term) is expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("all x ex y s(x) = y", True),
        ("~x = 0 -> T \\/ F", True),
        ("x < 1", False),
        ("x + 1 = 2", False),
        ("ex x @Lam(x)", False),
    ],
)
def test_is_successor_formula(text, expected):
    """'is_successor_formula' should accept only formulas of zero, successor and equality"""
    assert is_successor_formula(parse_arith(text)) is expected


def test_check_successor_formula():
    """'check_successor_formula' should raise a 'NotSuccessorFormulaError' naming the first atom
    outside the language"""
    check_successor_formula(parse_arith("ex x x = s(0)"))

    with pytest.raises(NotSuccessorFormulaError, match="'x < 1' is not in the language"):
        check_successor_formula(parse_arith("x = 0 /\\ x < 1"))
