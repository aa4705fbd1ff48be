import pytest
from hypothesis import given
from hypothesis import strategies as st

from embedding import ThetaFamily, make_theta, verify_theta
from exceptions import ElementOutsideDomainError, InvalidModelError, ThetaFamilyError
from formulas import Eq, Neg, Var, Zero, numeral, parse_arith, substitute_numerals
from successor import decide_successor, is_successor_formula


@pytest.mark.parametrize(
    "d, k, expected",
    [
        (2, 0, "x = 0 \\/ 2 < x"),
        (2, 1, "x = 1"),
        (2, 2, "x = 2"),
        (0, 0, "x = 0 \\/ 0 < x"),
    ],
)
def test_theta_formula(d, k, expected):
    """'ThetaFamily.formula' should be the equation with 'k' for 'k ≠ 0' and cover 0 and the
    values above 'd' for 'k = 0'"""
    assert make_theta(d).formula(k, Var("x")) == parse_arith(expected)


def test_theta_element_outside_domain():
    """'ThetaFamily' should raise an 'ElementOutsideDomainError' for elements outside the domain"""
    family = make_theta(1)

    message = r"Element 2 is not in the domain \{0, ..., 1\}"
    with pytest.raises(ElementOutsideDomainError, match=message):
        family.formula(2, Var("x"))
    with pytest.raises(ElementOutsideDomainError):
        family.holds(-1, 0)


def test_make_theta_negative():
    """'make_theta' should raise an 'InvalidModelError' for a negative 'd'"""
    with pytest.raises(InvalidModelError, match="must be a natural, got -1"):
        make_theta(-1)


@pytest.mark.parametrize(
    "value, expected",
    [(0, 0), (1, 1), (2, 2), (3, 0), (10, 0)],
)
def test_theta_element_of(value, expected):
    """'ThetaFamily.element_of' should give the element whose θ formula the value satisfies"""
    family = make_theta(2)

    assert family.element_of(value) == expected
    assert family.holds(expected, value)


def test_theta_match():
    """'ThetaFamily.match' should recognize the θ formulas of the term"""
    family = make_theta(2)

    assert family.match(parse_arith("y = 0 \\/ 2 < y"), Var("y")) == 0
    assert family.match(parse_arith("y = 2"), Var("y")) == 2
    assert family.match(parse_arith("y = 3"), Var("y")) is None
    assert family.match(parse_arith("x = 2"), Var("y")) is None
    assert family.match(parse_arith("2 < y \\/ y = 0"), Var("y")) is None


def test_theta_successor_formula():
    """'ThetaFamily.successor_formula' should write θ_0 with zero and successor"""
    family = make_theta(1)
    formula = family.successor_formula(0, Var("x"))

    assert is_successor_formula(formula)
    assert formula == parse_arith("x = 0 \\/ ex _w x = s(s(_w))")
    assert family.successor_formula(1, Var("x")) == parse_arith("x = 1")


@pytest.mark.parametrize("d", range(7))
def test_verify_theta(d):
    """'verify_theta' should accept the θ family of every small domain after deciding its zero and
    successor formulas"""
    verify_theta(ThetaFamily(d))

    assert make_theta(d) == ThetaFamily(d)


def test_verify_theta_shared_instance(monkeypatch):
    """'verify_theta' should raise a 'ThetaFamilyError' when two θ formulas share an instance"""
    monkeypatch.setattr(ThetaFamily, "successor_formula", lambda self, k, term: Eq(term, Zero()))

    with pytest.raises(ThetaFamilyError, match="θ_0 and θ_1 share an instance for d=1"):
        verify_theta(ThetaFamily(1))


def test_verify_theta_no_instance(monkeypatch):
    """'verify_theta' should raise a 'ThetaFamilyError' when a θ formula has no instance"""
    monkeypatch.setattr(
        ThetaFamily, "successor_formula", lambda self, k, term: Neg(Eq(term, term))
    )

    with pytest.raises(ThetaFamilyError, match="θ_0 has no instance for d=2"):
        verify_theta(ThetaFamily(2))


def test_verify_theta_not_covering(monkeypatch):
    """'verify_theta' should raise a 'ThetaFamilyError' when some natural satisfies no θ formula"""
    monkeypatch.setattr(
        ThetaFamily, "successor_formula", lambda self, k, term: Eq(term, numeral(k + 1))
    )

    with pytest.raises(ThetaFamilyError, match="don't cover the naturals for d=1"):
        verify_theta(ThetaFamily(1))


def test_verify_theta_disagreement(monkeypatch):
    """'verify_theta' should raise a 'ThetaFamilyError' when the printed θ formulas don't agree
    with their zero and successor version"""
    monkeypatch.setattr(ThetaFamily, "holds", lambda self, k, value: False)

    with pytest.raises(ThetaFamilyError, match="θ_0 disagrees with its successor version on 0"):
        verify_theta(ThetaFamily(1))


@given(st.integers(0, 6), st.integers(0, 12))
def test_theta_partition(d, value):
    """Every natural should satisfy exactly one θ formula, in agreement with its zero and
    successor version"""
    family = make_theta(d)
    satisfied = [k for k in family.domain if family.holds(k, value)]

    assert satisfied == [family.element_of(value)]
    for k in family.domain:
        instance = substitute_numerals(family.successor_formula(k, Var("x")), {"x": value})
        assert decide_successor(instance) is family.holds(k, value)
