"""
Quantifier elimination for the theory of zero and successor.

Formulas are kept in disjunctive normal form, as lists of conjunctions of literals. A literal
states 'u + a = v + b' (or its negation) where 'u' and 'v' are variables or zero. Quantifiers are
eliminated innermost first: an existential over a conjunction is solved with one of its positive
equations when there is one, substituting the solution into the other literals, and is dropped
otherwise, since a conjunction of disequations excludes only finitely many values.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from formulas import (
    And,
    ArithFormula,
    Bot,
    Eq,
    Exists,
    Forall,
    Imp,
    Neg,
    Or,
    Term,
    Top,
    Var,
    Zero,
    conjunction,
    disjunction,
    split_succ,
    succ_power,
)

from .language import check_successor_formula

_logger = logging.getLogger("successor.elimination")

# Side of a literal standing for the constant zero. Variable names are never empty
ZERO = ""


@dataclass(frozen=True, order=True)
class Literal:
    """'left + left_offset = right + right_offset', negated when not 'positive'. Sides are
    ordered, distinct, and at most one offset is not zero"""

    left: str
    left_offset: int
    right: str
    right_offset: int
    positive: bool = True

    def negated(self) -> Literal:
        return Literal(
            self.left, self.left_offset, self.right, self.right_offset, not self.positive
        )

    def mentions(self, variable: str) -> bool:
        return variable in (self.left, self.right)

    def oriented(self, variable: str) -> tuple[int, str, int]:
        """Get '(a, other, b)' so the literal reads 'variable + a ⋈ other + b'"""
        if self.left == variable:
            return self.left_offset, self.right, self.right_offset
        return self.right_offset, self.left, self.left_offset

    def to_formula(self) -> ArithFormula:
        atom = Eq(
            succ_power(_side_term(self.left), self.left_offset),
            succ_power(_side_term(self.right), self.right_offset),
        )
        return atom if self.positive else Neg(atom)


def _side_term(side: str) -> Term:
    return Zero() if side == ZERO else Var(side)


def make_literal(left: str, a: int, right: str, b: int, positive: bool = True) -> Literal | bool:
    """Normalize 'left + a = right + b'. Returns a boolean when the truth value doesn't depend on
    the variables"""
    if left == right:
        return (a == b) == positive

    common = min(a, b)
    a, b = a - common, b - common
    if left > right:
        left, a, right, b = right, b, left, a

    # '0 = v + b' with 'b > 0' never holds
    if left == ZERO and b > 0:
        return not positive

    return Literal(left, a, right, b, positive)


def literal_from_equation(equation: Eq) -> Literal | bool:
    left_count, left_base = split_succ(equation.left)
    right_count, right_base = split_succ(equation.right)
    left = left_base.name if isinstance(left_base, Var) else ZERO
    right = right_base.name if isinstance(right_base, Var) else ZERO
    return make_literal(left, left_count, right, right_count)


Conjunct = frozenset[Literal]
Dnf = list[Conjunct]

TRUE: Dnf = [frozenset()]
FALSE: Dnf = []


def simplify(dnf: Dnf) -> Dnf:
    """Drop contradictory and subsumed conjunctions"""
    consistent = {
        conjunct
        for conjunct in dnf
        if not any(literal.negated() in conjunct for literal in conjunct)
    }
    kept: list[Conjunct] = []
    for conjunct in sorted(consistent, key=lambda item: (len(item), sorted(item))):
        if not any(other <= conjunct for other in kept):
            kept.append(conjunct)
    return kept


def dnf_and(first: Dnf, second: Dnf) -> Dnf:
    return simplify([left | right for left in first for right in second])


def dnf_or(first: Dnf, second: Dnf) -> Dnf:
    return simplify(first + second)


def dnf_not(dnf: Dnf) -> Dnf:
    result = TRUE
    for conjunct in dnf:
        clause = [frozenset({literal.negated()}) for literal in conjunct]
        result = dnf_and(result, clause)
        if not result:
            break
    return result


def _add_literal(literals: set[Literal], literal: Literal | bool) -> bool:
    """Add a literal to a conjunction, returning 'False' if the conjunction became false"""
    if literal is True:
        return True
    if literal is False:
        return False
    literals.add(literal)
    return True


def eliminate_exists(variable: str, conjunct: Conjunct) -> Dnf:
    """Eliminate '∃variable' from a conjunction of literals"""
    mentioning = sorted(literal for literal in conjunct if literal.mentions(variable))
    result = set(conjunct - set(mentioning))

    positives = [literal for literal in mentioning if literal.positive]
    if not positives:
        # Each disequation excludes a single value
        return [frozenset(result)]

    # The pivot 'x + a = T + b' defines 'x' as 'T + b - a', which needs 'T + b >= a'
    pivot = positives[0]
    a, solution, b = pivot.oriented(variable)
    for k in range(a - b):
        if not _add_literal(result, make_literal(solution, 0, ZERO, k, positive=False)):
            return FALSE

    for literal in mentioning:
        if literal == pivot:
            continue
        other_a, other, other_b = literal.oriented(variable)
        substituted = make_literal(solution, b + other_a, other, other_b + a, literal.positive)
        if not _add_literal(result, substituted):
            return FALSE

    return simplify([frozenset(result)])


def to_dnf(formula: ArithFormula) -> Dnf:
    """Get a quantifier free disjunctive normal form equivalent to the formula"""
    match formula:
        case Top():
            return TRUE
        case Bot():
            return FALSE
        case Eq():
            literal = literal_from_equation(formula)
            if isinstance(literal, bool):
                return TRUE if literal else FALSE
            return [frozenset({literal})]
        case Neg(body):
            return dnf_not(to_dnf(body))
        case And(left, right):
            return dnf_and(to_dnf(left), to_dnf(right))
        case Or(left, right):
            return dnf_or(to_dnf(left), to_dnf(right))
        case Imp(left, right):
            return dnf_or(dnf_not(to_dnf(left)), to_dnf(right))
        case Exists(var, body):
            result: Dnf = []
            for conjunct in to_dnf(body):
                result.extend(eliminate_exists(var, conjunct))
            return simplify(result)
        case Forall(var, body):
            negated: Dnf = []
            for conjunct in dnf_not(to_dnf(body)):
                negated.extend(eliminate_exists(var, conjunct))
            return dnf_not(simplify(negated))
    raise TypeError(f"Not a successor formula: {formula!r}")


def dnf_to_formula(dnf: Dnf) -> ArithFormula:
    """Build the canonical formula of a normal form, with sorted literals and conjunctions"""
    conjuncts = sorted(sorted(conjunct) for conjunct in dnf)
    return disjunction(
        [conjunction([literal.to_formula() for literal in conjunct]) for conjunct in conjuncts]
    )


def eliminate_quantifiers(formula: ArithFormula) -> ArithFormula:
    """Get a quantifier free formula equivalent to the formula over the naturals with zero and
    successor"""
    check_successor_formula(formula)
    dnf = to_dnf(formula)
    _logger.debug(f"Eliminated quantifiers into {len(dnf)} conjunctions")
    return dnf_to_formula(dnf)
