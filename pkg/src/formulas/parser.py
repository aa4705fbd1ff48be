import logging
from functools import cache
from typing import Any, Mapping

import lark

from exceptions import FormulaSyntaxError, UnknownAtomError

from .analysis import opaque_arities, predicate_arities
from .grammar import ARITH_GRAMMAR, MODAL_GRAMMAR
from .nodes import (
    Add,
    And,
    ArithFormula,
    Bot,
    Box,
    Eq,
    Exists,
    Forall,
    Imp,
    Lt,
    ModalFormula,
    Mul,
    Neg,
    OpaqueAtom,
    Or,
    Pred,
    Quote,
    Succ,
    Term,
    Top,
    Var,
    numeral,
)

_logger = logging.getLogger("formulas.parser")


class _ConnectivesTransformer(lark.Transformer[Any, Any]):
    def imp(self, children: list[Any]) -> Imp:
        return Imp(children[0], children[1])

    def or_(self, children: list[Any]) -> Or:
        return Or(children[0], children[1])

    def and_(self, children: list[Any]) -> And:
        return And(children[0], children[1])

    def neg(self, children: list[Any]) -> Neg:
        return Neg(children[0])

    def forall(self, children: list[Any]) -> Forall:
        return Forall(str(children[0]), children[1])

    def exists(self, children: list[Any]) -> Exists:
        return Exists(str(children[0]), children[1])

    def top(self, children: list[Any]) -> Top:
        return Top()

    def bot(self, children: list[Any]) -> Bot:
        return Bot()


class _ModalTransformer(_ConnectivesTransformer):
    def box(self, children: list[Any]) -> Box:
        return Box(children[0])

    def dia(self, children: list[Any]) -> Neg:
        # The diamond is the dual of the box
        return Neg(Box(Neg(children[0])))

    def pred(self, children: list[Any]) -> Pred:
        arguments = tuple(child for child in children[1:] if child is not None)
        return Pred(str(children[0]), arguments)

    def argument(self, children: list[Any]) -> str | int:
        token = children[0]
        if token.type == "NUMBER":
            return int(token)
        return str(token)


class _ArithTransformer(_ConnectivesTransformer):
    def eq(self, children: list[Any]) -> Eq:
        return Eq(children[0], children[1])

    def lt(self, children: list[Any]) -> Lt:
        return Lt(children[0], children[1])

    def opaque(self, children: list[Any]) -> OpaqueAtom:
        arguments = tuple(child for child in children[1:] if child is not None)
        return OpaqueAtom(str(children[0])[1:], arguments)

    def add(self, children: list[Any]) -> Add:
        return Add(children[0], children[1])

    def mul(self, children: list[Any]) -> Mul:
        return Mul(children[0], children[1])

    def numeral(self, children: list[Any]) -> Term:
        return numeral(int(children[0]))

    def succ(self, children: list[Any]) -> Succ:
        return Succ(children[0])

    def var(self, children: list[Any]) -> Var:
        return Var(str(children[0]))

    def quote(self, children: list[Any]) -> Quote:
        dotted = tuple(str(child) for child in children[1:] if child is not None)
        return Quote(children[0], dotted)


@cache
def _modal_parser() -> lark.Lark:
    return lark.Lark(
        MODAL_GRAMMAR, parser="lalr", start="formula", transformer=_ModalTransformer()
    )


@cache
def _arith_parser() -> lark.Lark:
    return lark.Lark(
        ARITH_GRAMMAR, parser="lalr", start=["formula", "term"], transformer=_ArithTransformer()
    )


def _parse(parser: lark.Lark, text: str, start: str) -> Any:
    try:
        return parser.parse(text, start=start)
    except lark.exceptions.UnexpectedInput as e:
        message = str(e).strip().splitlines()[0]
        line = e.line if e.line > 0 else None
        column = e.column if e.column > 0 else None
        raise FormulaSyntaxError(f"Invalid {start} {text!r}: {message}", line, column) from e


def parse_modal(text: str, arities: Mapping[str, int] | None = None) -> ModalFormula:
    """Parse a modal formula. Predicate arities must be consistent inside the formula and, when
    provided, with the declared 'arities'"""
    formula: ModalFormula = _parse(_modal_parser(), text, "formula")
    predicate_arities(formula, arities)
    return formula


def parse_arith(text: str, registry: Mapping[str, int] | None = None) -> ArithFormula:
    """Parse an arithmetic formula, expanding numerals into successor chains. When a 'registry' of
    opaque atom arities is provided, unknown opaque atoms are rejected"""
    formula: ArithFormula = _parse(_arith_parser(), text, "formula")
    used = opaque_arities(formula, registry)
    if registry is not None:
        unknown = sorted(set(used) - set(registry))
        if unknown:
            raise UnknownAtomError(f"Unknown opaque atoms {unknown} in {text!r}")
    return formula


def parse_term(text: str) -> Term:
    """Parse an arithmetic term"""
    term: Term = _parse(_arith_parser(), text, "term")
    return term
