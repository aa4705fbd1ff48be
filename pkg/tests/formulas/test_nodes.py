import pytest

from formulas import (
    And,
    Bot,
    Eq,
    Or,
    Succ,
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

A = Eq(Var("x"), Zero())
B = Eq(Var("y"), Zero())
C = Eq(Var("z"), Zero())


@pytest.mark.parametrize("value", [0, 1, 2, 7])
def test_numeral(value):
    """'numeral' should build a chain of successors with the value's length"""
    count, base = split_succ(numeral(value))
    assert count == value
    assert base == Zero()
    assert numeral_value(numeral(value)) == value


def test_numeral_negative():
    """'numeral' should raise a 'ValueError' for negative numbers"""
    with pytest.raises(ValueError, match="only defined for naturals"):
        numeral(-1)


def test_succ_power():
    """'succ_power' should apply the successor the requested number of times"""
    assert succ_power(Var("x"), 0) == Var("x")
    assert succ_power(Var("x"), 2) == Succ(Succ(Var("x")))


def test_numeral_value_not_numeral():
    """'numeral_value' should return 'None' for terms that are not closed successor chains"""
    assert numeral_value(Succ(Var("x"))) is None


@pytest.mark.parametrize(
    "items, expected",
    [
        ([], Top()),
        ([A], A),
        ([A, B], And(A, B)),
        ([A, B, C], And(And(A, B), C)),
    ],
)
def test_conjunction(items, expected):
    """'conjunction' should fold the items to the left, with '⊤' for no items"""
    assert conjunction(items) == expected


@pytest.mark.parametrize(
    "items, expected",
    [
        ([], Bot()),
        ([A], A),
        ([A, B, C], Or(Or(A, B), C)),
    ],
)
def test_disjunction(items, expected):
    """'disjunction' should fold the items to the left, with '⊥' for no items"""
    assert disjunction(items) == expected


@pytest.mark.parametrize("items", [[A], [A, B], [A, B, C], [C, A, B, A]])
def test_flatten_conjunction(items):
    """'flatten_conjunction' should recover the conjuncts of a left folded conjunction"""
    assert flatten_conjunction(conjunction(items)) == items


def test_nodes_hashable():
    """Formula nodes should be hashable and compared structurally"""
    assert {And(A, B), And(A, B)} == {And(A, B)}
    assert And(A, B) != And(B, A)
