"""
Syntax trees for the two languages handled by the workbench.

Both languages share the propositional connectives and the quantifiers. The modal language adds
predicate atoms over variables and domain constants plus the box, while the arithmetic language
adds equations and inequalities between terms over {0, s, +, ×} and opaque named atoms. Opaque
atoms stand for predicates that are only defined through fixed points (the trace predicate,
provability predicates, the opaque θ atoms) and are never evaluated.

Every node is an immutable dataclass, so formulas can be hashed, compared structurally and shared.
"""

from __future__ import annotations

from dataclasses import dataclass

# Names starting with this prefix are generated by the constructions and never written by users
RESERVED_PREFIX = "_"


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Succ:
    arg: Term


@dataclass(frozen=True, slots=True)
class Add:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Quote:
    """Structured code of an arithmetic formula. The dotted variables are the free variables whose
    values are plugged into the code, so they are the free variables of the term itself"""

    body: ArithFormula
    dotted: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Neg:
    body: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Pred:
    """Modal predicate atom. Arguments are variable names or domain constants"""

    name: str
    args: tuple[str | int, ...] = ()


@dataclass(frozen=True, slots=True)
class Box:
    body: Formula


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class OpaqueAtom:
    name: str
    args: tuple[Term, ...] = ()


Term = Zero | Var | Succ | Add | Mul | Quote

ModalFormula = Top | Bot | Pred | Neg | And | Or | Imp | Forall | Exists | Box
ArithFormula = Top | Bot | Eq | Lt | OpaqueAtom | Neg | And | Or | Imp | Forall | Exists
Formula = Top | Bot | Pred | Box | Eq | Lt | OpaqueAtom | Neg | And | Or | Imp | Forall | Exists

BINARY_CONNECTIVES = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)
ARITH_ATOMS = (Eq, Lt, OpaqueAtom, Top, Bot)


def numeral(value: int) -> Term:
    """Build the numeral of a natural number as a chain of successors above zero"""
    if value < 0:
        raise ValueError(f"Numerals are only defined for naturals, got {value}")
    term: Term = Zero()
    for _ in range(value):
        term = Succ(term)
    return term


def succ_power(term: Term, times: int) -> Term:
    """Apply the successor 'times' times to a term"""
    for _ in range(times):
        term = Succ(term)
    return term


def split_succ(term: Term) -> tuple[int, Term]:
    """Split a term into the number of leading successors and the term below them"""
    count = 0
    while isinstance(term, Succ):
        count += 1
        term = term.arg
    return count, term


def numeral_value(term: Term) -> int | None:
    """Value of a closed successor chain, or 'None' if the term is not a numeral"""
    count, base = split_succ(term)
    if isinstance(base, Zero):
        return count
    return None


def conjunction(items: list[Formula] | tuple[Formula, ...]) -> Formula:
    """Left folded conjunction. The empty conjunction is '⊤'"""
    if not items:
        return Top()
    result = items[0]
    for item in items[1:]:
        result = And(result, item)
    return result


def disjunction(items: list[Formula] | tuple[Formula, ...]) -> Formula:
    """Left folded disjunction. The empty disjunction is '⊥'"""
    if not items:
        return Bot()
    result = items[0]
    for item in items[1:]:
        result = Or(result, item)
    return result


def flatten_conjunction(formula: Formula) -> list[Formula]:
    """Inverse of 'conjunction' for left folded conjunctions"""
    conjuncts: list[Formula] = []
    while isinstance(formula, And):
        conjuncts.append(formula.right)
        formula = formula.left
    conjuncts.append(formula)
    conjuncts.reverse()
    return conjuncts
