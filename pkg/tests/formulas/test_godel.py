import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from configs import configs
from exceptions import EnumerationLimitError, NotAFormulaError
from formulas import (
    Bot,
    Eq,
    Neg,
    OpaqueAtom,
    Quote,
    Top,
    Var,
    Zero,
    encode_term,
    formulas_up_to,
    godel_decode,
    godel_encode,
    is_formula_code,
    numeral,
    pair,
    unpair,
)
from tests.strategies import successor_formulas


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_unpair(a, b):
    """'unpair' should invert 'pair'"""
    assert unpair(pair(a, b)) == (a, b)


@pytest.mark.parametrize("code", [0, 1, 2, 3, 100, 12345])
def test_pair(code):
    """'pair' should invert 'unpair'"""
    assert pair(*unpair(code)) == code


def test_godel_encode_constants():
    """'godel_encode' should give the smallest codes to the constant formulas"""
    assert godel_encode(Top()) == 1
    assert godel_encode(Bot()) == 2
    assert godel_encode(Eq(Zero(), Zero())) == 26


def test_encode_term_numeral():
    """'encode_term' should code a run of successors as a single node"""
    assert encode_term(Zero()) == 1
    assert encode_term(numeral(5)) == 188


@given(successor_formulas(bound=("x", "y")))
def test_godel_decode(formula):
    """'godel_decode' should recover the formula from its code"""
    assert godel_decode(godel_encode(formula)) == formula


@given(successor_formulas(bound=("x",)))
def test_godel_encode_children(formula):
    """'godel_encode' should give a formula a code larger than the codes of its parts"""
    assert godel_encode(Neg(formula)) > godel_encode(formula)


def test_godel_decode_quote_and_opaque():
    """'godel_decode' should recover quotes and opaque atoms"""
    formula = OpaqueAtom("Prg", (Quote(Eq(Var("x"), Zero()), ("x",)), numeral(2)))
    assert godel_decode(godel_encode(formula)) == formula


@pytest.mark.parametrize("code", [0, 3, 21])
def test_godel_decode_not_a_formula(code):
    """'godel_decode' should raise a 'NotAFormulaError' for numbers that are not canonical
    codes"""
    with pytest.raises(NotAFormulaError):
        godel_decode(code)
    assert not is_formula_code(code)


def test_formulas_up_to():
    """'formulas_up_to' should list the formulas with code up to the height, ordered by code"""
    assert formulas_up_to(2) == [Top(), Bot()]

    formulas = formulas_up_to(200)
    codes = [godel_encode(formula) for formula in formulas]
    assert codes == sorted(codes)
    assert all(code <= 200 for code in codes)
    assert Eq(Zero(), Zero()) in formulas
    assert len(formulas) == sum(is_formula_code(code) for code in range(1, 201))


def test_formulas_up_to_limit(monkeypatch):
    """'formulas_up_to' should raise an 'EnumerationLimitError' over the configured limit"""
    monkeypatch.setattr(configs.limits, "godel_pool_max_height", 10)

    assert len(formulas_up_to(10)) > 0
    with pytest.raises(EnumerationLimitError, match="over the limit of 10"):
        formulas_up_to(11)


@pytest.mark.acceptance
@settings(max_examples=10_000)
@given(successor_formulas(bound=("x", "y")))
def test_godel_decode_corpus(formula):
    """'godel_decode' should invert 'godel_encode' on the full corpus, so distinct formulas get
    distinct codes"""
    assert godel_decode(godel_encode(formula)) == formula
