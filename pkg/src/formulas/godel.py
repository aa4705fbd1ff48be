"""
Gödel numbering of arithmetic formulas.

Codes are built with the Cantor pairing function. Every node is coded as '1 + pair(tag, payload)',
so every code is at least 1 and the code of a node is strictly larger than the codes of its
children. Runs of successors are coded as a single node, which keeps the codes of numerals small.
"""

import logging
import re
from math import isqrt

from configs import configs
from exceptions import EnumerationLimitError, NotAFormulaError

from .nodes import (
    Add,
    And,
    ArithFormula,
    Bot,
    Eq,
    Exists,
    Forall,
    Imp,
    Lt,
    Mul,
    Neg,
    OpaqueAtom,
    Or,
    Quote,
    Succ,
    Term,
    Top,
    Var,
    Zero,
    split_succ,
    succ_power,
)

_logger = logging.getLogger("formulas.godel")

_VARIABLE_NAME = re.compile(r"[a-z_][A-Za-z0-9_]*")
_ATOM_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_KEYWORDS = {"s", "all", "ex", "box", "dia"}

_TERM_ZERO, _TERM_VAR, _TERM_SUCC, _TERM_ADD, _TERM_MUL, _TERM_QUOTE = range(6)
(
    _TOP,
    _BOT,
    _EQ,
    _LT,
    _NEG,
    _AND,
    _OR,
    _IMP,
    _FORALL,
    _EXISTS,
    _OPAQUE,
) = range(11)


def pair(a: int, b: int) -> int:
    """Cantor pairing function"""
    return (a + b) * (a + b + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    """Inverse of the Cantor pairing function"""
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def _node(tag: int, payload: int) -> int:
    return 1 + pair(tag, payload)


def _encode_name(name: str) -> int:
    return int.from_bytes(name.encode("utf-8"), "big")


def _decode_name(code: int, pattern: re.Pattern[str]) -> str:
    try:
        name = code.to_bytes((code.bit_length() + 7) // 8, "big").decode("utf-8")
    except UnicodeDecodeError as e:
        raise NotAFormulaError(f"{code} is not the code of a name") from e
    if not pattern.fullmatch(name) or name in _KEYWORDS:
        raise NotAFormulaError(f"{code} is not the code of a name")
    return name


def _encode_list(codes: list[int]) -> int:
    result = 0
    for code in reversed(codes):
        result = 1 + pair(code, result)
    return result


def _decode_list(code: int) -> list[int]:
    items = []
    while code > 0:
        head, code = unpair(code - 1)
        items.append(head)
    return items


def encode_term(term: Term) -> int:
    """Get the code of an arithmetic term"""
    match term:
        case Zero():
            return _node(_TERM_ZERO, 0)
        case Var(name):
            return _node(_TERM_VAR, _encode_name(name))
        case Succ():
            count, base = split_succ(term)
            return _node(_TERM_SUCC, pair(count - 1, encode_term(base)))
        case Add(left, right):
            return _node(_TERM_ADD, pair(encode_term(left), encode_term(right)))
        case Mul(left, right):
            return _node(_TERM_MUL, pair(encode_term(left), encode_term(right)))
        case Quote(body, dotted):
            names = _encode_list([_encode_name(name) for name in dotted])
            return _node(_TERM_QUOTE, pair(godel_encode(body), names))
    raise TypeError(f"Not a term: {term!r}")


def godel_encode(formula: ArithFormula) -> int:
    """Get the Gödel code of an arithmetic formula"""
    match formula:
        case Top():
            return _node(_TOP, 0)
        case Bot():
            return _node(_BOT, 0)
        case Eq(left, right):
            return _node(_EQ, pair(encode_term(left), encode_term(right)))
        case Lt(left, right):
            return _node(_LT, pair(encode_term(left), encode_term(right)))
        case Neg(body):
            return _node(_NEG, godel_encode(body))
        case And(left, right):
            return _node(_AND, pair(godel_encode(left), godel_encode(right)))
        case Or(left, right):
            return _node(_OR, pair(godel_encode(left), godel_encode(right)))
        case Imp(left, right):
            return _node(_IMP, pair(godel_encode(left), godel_encode(right)))
        case Forall(var, body):
            return _node(_FORALL, pair(_encode_name(var), godel_encode(body)))
        case Exists(var, body):
            return _node(_EXISTS, pair(_encode_name(var), godel_encode(body)))
        case OpaqueAtom(name, args):
            arguments = _encode_list([encode_term(arg) for arg in args])
            return _node(_OPAQUE, pair(_encode_name(name), arguments))
    raise TypeError(f"Not an arithmetic formula: {formula!r}")


def _decode_term(code: int) -> Term:
    if code < 1:
        raise NotAFormulaError(f"{code} is not the code of a term")

    tag, payload = unpair(code - 1)
    if tag == _TERM_ZERO:
        return Zero()
    if tag == _TERM_VAR:
        return Var(_decode_name(payload, _VARIABLE_NAME))
    if tag == _TERM_SUCC:
        count, base = unpair(payload)
        return succ_power(_decode_term(base), count + 1)
    if tag == _TERM_ADD:
        left, right = unpair(payload)
        return Add(_decode_term(left), _decode_term(right))
    if tag == _TERM_MUL:
        left, right = unpair(payload)
        return Mul(_decode_term(left), _decode_term(right))
    if tag == _TERM_QUOTE:
        body, names = unpair(payload)
        dotted = tuple(_decode_name(name, _VARIABLE_NAME) for name in _decode_list(names))
        return Quote(_decode_formula(body), dotted)
    raise NotAFormulaError(f"{code} is not the code of a term")


def _decode_formula(code: int) -> ArithFormula:
    if code < 1:
        raise NotAFormulaError(f"{code} is not the code of a formula")

    tag, payload = unpair(code - 1)
    if tag == _TOP:
        return Top()
    if tag == _BOT:
        return Bot()
    if tag in (_EQ, _LT):
        left, right = unpair(payload)
        atom = Eq if tag == _EQ else Lt
        return atom(_decode_term(left), _decode_term(right))
    if tag == _NEG:
        return Neg(_decode_formula(payload))
    if tag in (_AND, _OR, _IMP):
        left, right = unpair(payload)
        connective = {_AND: And, _OR: Or, _IMP: Imp}[tag]
        return connective(_decode_formula(left), _decode_formula(right))
    if tag in (_FORALL, _EXISTS):
        name, body = unpair(payload)
        quantifier = Forall if tag == _FORALL else Exists
        return quantifier(_decode_name(name, _VARIABLE_NAME), _decode_formula(body))
    if tag == _OPAQUE:
        name, arguments = unpair(payload)
        args = tuple(_decode_term(arg) for arg in _decode_list(arguments))
        return OpaqueAtom(_decode_name(name, _ATOM_NAME), args)
    raise NotAFormulaError(f"{code} is not the code of a formula")


def godel_decode(code: int) -> ArithFormula:
    """Get the formula with the given code. Raises 'NotAFormulaError' if the number is not the
    code of any formula"""
    formula = _decode_formula(code)
    # Non canonical codes (a payload on a constant, a successor run split in two) decode to a
    # formula with another code
    if godel_encode(formula) != code:
        raise NotAFormulaError(f"{code} is not the code of a formula")
    return formula


def is_formula_code(code: int) -> bool:
    try:
        godel_decode(code)
    except NotAFormulaError:
        return False
    return True


def formulas_up_to(height: int) -> list[ArithFormula]:
    """Get the formulas with code at most 'height', ordered by code"""
    limit = configs.limits.godel_pool_max_height
    if height > limit:
        raise EnumerationLimitError(
            f"Enumerating formulas up to code {height} is over the limit of {limit}"
        )

    formulas = []
    for code in range(1, height + 1):
        try:
            formulas.append(godel_decode(code))
        except NotAFormulaError:
            continue
    _logger.debug(f"{len(formulas)} formulas with code up to {height}")
    return formulas
