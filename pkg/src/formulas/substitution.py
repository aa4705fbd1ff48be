from typing import Mapping

from .analysis import free_variables, term_variables
from .nodes import (
    Add,
    And,
    ArithFormula,
    Bot,
    Box,
    Eq,
    Exists,
    Forall,
    Formula,
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
    Zero,
    numeral,
    numeral_value,
)


def fresh_variable(base: str, avoid: set[str] | frozenset[str]) -> str:
    """Get a variable name starting with 'base' that is not in 'avoid'"""
    index = 0
    while f"{base}_{index}" in avoid:
        index += 1
    return f"{base}_{index}"


def _substitute_quote(quote: Quote, mapping: Mapping[str, Term]) -> Quote:
    body_mapping: dict[str, Term] = {}
    dotted: list[str] = []
    for name in quote.dotted:
        if name not in mapping:
            dotted.append(name)
            continue

        replacement = mapping[name]
        if numeral_value(replacement) is not None:
            # A numeral plugged into a dotted variable becomes part of the code
            body_mapping[name] = replacement
        elif isinstance(replacement, Var):
            body_mapping[name] = replacement
            dotted.append(replacement.name)
        else:
            raise ValueError(
                f"Only numerals and variables can replace the dotted variable '{name}'"
            )

    if not body_mapping:
        return quote
    return Quote(substitute(quote.body, body_mapping), tuple(dotted))


def substitute_term(term: Term, mapping: Mapping[str, Term]) -> Term:
    """Replace the variables of a term by the terms in 'mapping'"""
    match term:
        case Zero():
            return term
        case Var(name):
            return mapping.get(name, term)
        case Succ(arg):
            return Succ(substitute_term(arg, mapping))
        case Add(left, right):
            return Add(substitute_term(left, mapping), substitute_term(right, mapping))
        case Mul(left, right):
            return Mul(substitute_term(left, mapping), substitute_term(right, mapping))
        case Quote():
            return _substitute_quote(term, mapping)
    raise TypeError(f"Not a term: {term!r}")


def substitute(formula: ArithFormula, mapping: Mapping[str, Term]) -> ArithFormula:
    """Replace the free occurrences of variables by terms, renaming bound variables when they
    would capture a variable of a replacement"""
    match formula:
        case Top() | Bot():
            return formula
        case Eq(left, right):
            return Eq(substitute_term(left, mapping), substitute_term(right, mapping))
        case Lt(left, right):
            return Lt(substitute_term(left, mapping), substitute_term(right, mapping))
        case OpaqueAtom(name, args):
            return OpaqueAtom(name, tuple(substitute_term(arg, mapping) for arg in args))
        case Neg(body):
            return Neg(substitute(body, mapping))
        case And(left, right):
            return And(substitute(left, mapping), substitute(right, mapping))
        case Or(left, right):
            return Or(substitute(left, mapping), substitute(right, mapping))
        case Imp(left, right):
            return Imp(substitute(left, mapping), substitute(right, mapping))
        case Forall(var, body) | Exists(var, body):
            quantifier = type(formula)
            body_free = free_variables(body)
            inner = {
                name: term for name, term in mapping.items() if name != var and name in body_free
            }
            if not inner:
                return formula

            captured = set().union(*(term_variables(term) for term in inner.values()))
            if var in captured:
                new_var = fresh_variable(var, captured | body_free)
                inner[var] = Var(new_var)
                return quantifier(new_var, substitute(body, inner))  # type: ignore[arg-type]
            return quantifier(var, substitute(body, inner))  # type: ignore[arg-type]
    raise TypeError(f"Not an arithmetic formula: {formula!r}")


def substitute_numerals(formula: ArithFormula, values: Mapping[str, int]) -> ArithFormula:
    """Replace each free occurrence of the variables in 'values' by the numeral of its value.
    Entries for variables that are not free are ignored"""
    return substitute(formula, {name: numeral(value) for name, value in values.items()})


def rename_variables(formula: ArithFormula, names: Mapping[str, str]) -> ArithFormula:
    """Rename free variables, avoiding captures"""
    return substitute(formula, {old: Var(new) for old, new in names.items()})


def instantiate_modal(
    formula: ModalFormula, mapping: Mapping[str, str | int]
) -> ModalFormula:
    """Replace free variables of a modal formula by domain constants or other variables, avoiding
    captures"""
    result: Formula
    match formula:
        case Top() | Bot():
            result = formula
        case Pred(name, args):
            result = Pred(
                name, tuple(mapping.get(arg, arg) if isinstance(arg, str) else arg for arg in args)
            )
        case Neg(body):
            result = Neg(instantiate_modal(body, mapping))
        case Box(body):
            result = Box(instantiate_modal(body, mapping))
        case And(left, right):
            result = And(instantiate_modal(left, mapping), instantiate_modal(right, mapping))
        case Or(left, right):
            result = Or(instantiate_modal(left, mapping), instantiate_modal(right, mapping))
        case Imp(left, right):
            result = Imp(instantiate_modal(left, mapping), instantiate_modal(right, mapping))
        case Forall(var, body) | Exists(var, body):
            quantifier = type(formula)
            body_free = free_variables(body)
            inner = {
                name: value
                for name, value in mapping.items()
                if name != var and name in body_free
            }
            if not inner:
                return formula

            captured = {value for value in inner.values() if isinstance(value, str)}
            bound = var
            if var in captured:
                bound = fresh_variable(var, captured | body_free)
                inner[var] = bound
            result = quantifier(bound, instantiate_modal(body, inner))  # type: ignore[arg-type]
        case _:
            raise TypeError(f"Not a modal formula: {formula!r}")
    return result  # type: ignore[return-value]
