"""
Translation of arithmetic formulas into propositional formulas.

Each propositionally atomic formula (an equation, an inequality, an opaque atom or a quantified
formula) becomes a propositional variable keyed by its Gödel code, so the translation is injective.
The constants '⊤' and '⊥' are kept as propositional constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable

from formulas import (
    And,
    ArithFormula,
    Bot,
    Eq,
    Exists,
    Forall,
    Imp,
    Lt,
    Neg,
    OpaqueAtom,
    Or,
    Top,
    godel_encode,
)


@dataclass(frozen=True, slots=True)
class PVar:
    key: Hashable


@dataclass(frozen=True, slots=True)
class PTop:
    pass


@dataclass(frozen=True, slots=True)
class PBot:
    pass


@dataclass(frozen=True, slots=True)
class PNeg:
    body: PropFormula


@dataclass(frozen=True, slots=True)
class PAnd:
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True, slots=True)
class POr:
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True, slots=True)
class PImp:
    left: PropFormula
    right: PropFormula


PropFormula = PVar | PTop | PBot | PNeg | PAnd | POr | PImp


@lru_cache(maxsize=65536)
def atom_key(formula: ArithFormula) -> int:
    """Get the key of the propositional variable of an atomic formula"""
    return godel_encode(formula)


def translate(
    formula: ArithFormula, atom_variable: Callable[[ArithFormula], Hashable] = atom_key
) -> PropFormula:
    """Translate an arithmetic formula, homomorphically on the connectives. Each propositionally
    atomic subformula becomes the variable given by 'atom_variable'"""
    match formula:
        case Top():
            return PTop()
        case Bot():
            return PBot()
        case Eq() | Lt() | OpaqueAtom() | Forall() | Exists():
            return PVar(atom_variable(formula))
        case Neg(body):
            return PNeg(translate(body, atom_variable))
        case And(left, right):
            return PAnd(translate(left, atom_variable), translate(right, atom_variable))
        case Or(left, right):
            return POr(translate(left, atom_variable), translate(right, atom_variable))
        case Imp(left, right):
            return PImp(translate(left, atom_variable), translate(right, atom_variable))
    raise TypeError(f"Not an arithmetic formula: {formula!r}")


def translate_i(formula: ArithFormula) -> PropFormula:
    """Translate an arithmetic formula with one variable per distinct atomic subformula"""
    return translate(formula)
