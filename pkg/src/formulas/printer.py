from .nodes import (
    Add,
    And,
    Bot,
    Box,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Lt,
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
    Zero,
    numeral_value,
)

# Binding strength of each construction, the higher the tighter
_IMP = 1
_OR = 2
_AND = 3
_UNARY = 4
_ATOM = 5

_ADD = 1
_MUL = 2
_BASE = 3

_SYMBOLS = {
    "modal": {"and": "&", "or": "|"},
    "arith": {"and": "/\\", "or": "\\/"},
}


def _wrap(text: str, level: int, context: int) -> str:
    if level < context:
        return f"({text})"
    return text


def print_term(term: Term) -> str:
    """Print an arithmetic term. Closed successor chains are printed as decimal numerals"""
    return _print_term(term, _ADD)


def _print_term(term: Term, context: int) -> str:
    value = numeral_value(term)
    if value is not None:
        return str(value)

    match term:
        case Var(name):
            return name
        case Succ(arg):
            return f"s({_print_term(arg, _ADD)})"
        case Add(left, right):
            text = f"{_print_term(left, _ADD)} + {_print_term(right, _MUL)}"
            return _wrap(text, _ADD, context)
        case Mul(left, right):
            text = f"{_print_term(left, _MUL)} * {_print_term(right, _BASE)}"
            return _wrap(text, _MUL, context)
        case Quote(body, dotted):
            if dotted:
                return f"{{{print_arith(body)} ; {', '.join(dotted)}}}"
            return f"{{{print_arith(body)}}}"
        case Zero():
            return "0"
    raise TypeError(f"Not a term: {term!r}")


def _print_formula(formula: Formula, context: int, language: str) -> str:
    symbols = _SYMBOLS[language]

    match formula:
        case Top():
            return "T"
        case Bot():
            return "F"
        case Pred(name, args):
            if not args:
                return name
            return f"{name}({', '.join(str(arg) for arg in args)})"
        case Eq(left, right):
            return f"{print_term(left)} = {print_term(right)}"
        case Lt(left, right):
            return f"{print_term(left)} < {print_term(right)}"
        case OpaqueAtom(name, args):
            if not args:
                return f"@{name}"
            return f"@{name}({', '.join(print_term(arg) for arg in args)})"
        case Neg(body):
            text = "~" + _print_formula(body, _UNARY, language)
            return _wrap(text, _UNARY, context)
        case Box(body):
            text = "box " + _print_formula(body, _UNARY, language)
            return _wrap(text, _UNARY, context)
        case Forall(var, body):
            text = f"all {var} " + _print_formula(body, _UNARY, language)
            return _wrap(text, _UNARY, context)
        case Exists(var, body):
            text = f"ex {var} " + _print_formula(body, _UNARY, language)
            return _wrap(text, _UNARY, context)
        case And(left, right):
            text = (
                _print_formula(left, _AND, language)
                + f" {symbols['and']} "
                + _print_formula(right, _UNARY, language)
            )
            return _wrap(text, _AND, context)
        case Or(left, right):
            text = (
                _print_formula(left, _OR, language)
                + f" {symbols['or']} "
                + _print_formula(right, _AND, language)
            )
            return _wrap(text, _OR, context)
        case Imp(left, right):
            text = (
                _print_formula(left, _OR, language)
                + " -> "
                + _print_formula(right, _IMP, language)
            )
            return _wrap(text, _IMP, context)
    raise TypeError(f"Not a formula: {formula!r}")


def print_modal(formula: Formula) -> str:
    """Print a modal formula in the grammar accepted by 'parse_modal'"""
    return _print_formula(formula, _IMP, "modal")


def print_arith(formula: Formula) -> str:
    """Print an arithmetic formula in the grammar accepted by 'parse_arith'"""
    return _print_formula(formula, _IMP, "arith")
