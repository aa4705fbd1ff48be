import pytest
from hypothesis import given, settings

from exceptions import NotASentenceError, NotSuccessorFormulaError
from formulas import And, Neg, parse_arith, quantifier_rank
from successor import bound, bounded_eval, decide_successor
from tests.strategies import successor_formulas


@pytest.mark.parametrize(
    "text, expected",
    [
        ("ex x s(x) = s(s(0))", True),
        ("ex x s(x) = 0", False),
        ("all x ex y y = s(x)", True),
        ("all x ex y s(y) = x", False),
        ("all x (~x = 0 -> ex y s(y) = x)", True),
        ("ex x ex y (~x = y /\\ s(x) = s(y))", False),
        ("all x ~s(x) = x", True),
        ("ex x all y ~s(y) = x", True),
        ("ex x x = s(s(s(s(s(s(s(0)))))))", True),
        ("all x ex y ex z (~y = z /\\ ~y = x /\\ ~z = x)", True),
        ("T", True),
        ("0 = 1", False),
    ],
)
def test_decide_successor(text, expected):
    """'decide_successor' should decide the sentence over the naturals"""
    assert decide_successor(parse_arith(text)) is expected


def test_decide_successor_free_variables():
    """'decide_successor' should raise a 'NotASentenceError' for formulas with free variables"""
    with pytest.raises(NotASentenceError, match=r"free variables \['y'\]"):
        decide_successor(parse_arith("ex x x = y"))


def test_decide_successor_not_successor():
    """'decide_successor' should raise a 'NotSuccessorFormulaError' outside the language"""
    with pytest.raises(NotSuccessorFormulaError):
        decide_successor(parse_arith("ex x x + x = 2"))


@settings(max_examples=300)
@given(successor_formulas())
def test_decide_successor_bounded_eval(sentence):
    """'decide_successor' should agree with the bounded evaluation at the computed bound"""
    assert decide_successor(sentence) is bounded_eval(sentence, bound(sentence))


@pytest.mark.acceptance
@settings(max_examples=10_000)
@given(successor_formulas())
def test_decide_successor_bounded_eval_corpus(sentence):
    """'decide_successor' should agree with the bounded evaluation on the full corpus of sentences
    of rank at most 3"""
    assert quantifier_rank(sentence) <= 3
    assert decide_successor(sentence) is bounded_eval(sentence, bound(sentence))


@given(successor_formulas(), successor_formulas())
def test_decide_successor_connectives(first, second):
    """'decide_successor' should commute with negation and conjunction"""
    assert decide_successor(Neg(first)) is not decide_successor(first)
    assert decide_successor(And(first, second)) is (
        decide_successor(first) and decide_successor(second)
    )
