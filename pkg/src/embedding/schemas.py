"""
Formula schemas of the conversely well-founded construction.

The relations of the adjoined frame are written as finite disjunctions of equations over the
concrete pairs, so the schemas only mention the trace predicate, the axiom predicate and the
codes as opaque atoms.
"""

from typing import Iterable

from exceptions import InvalidBoundError
from formulas import (
    And,
    ArithFormula,
    Eq,
    Exists,
    Neg,
    OpaqueAtom,
    Or,
    Quote,
    Var,
    Zero,
    conjunction,
    disjunction,
    numeral,
)
from kripke import transitive_closure


def con_sequence(n: int, provability: str) -> ArithFormula:
    """Get 'Con^n', where 'Con^0' is '0 = 0' and 'Con^(n+1)' says that '¬Con^n' is not
    provable"""
    if n < 0:
        raise InvalidBoundError(f"The index must be a natural, got {n}")
    formula: ArithFormula = Eq(Zero(), Zero())
    for _ in range(n):
        formula = Neg(OpaqueAtom(provability, (Quote(Neg(formula)),)))
    return formula


def relation_formula(pairs: Iterable[tuple[int, int]], first: str, second: str) -> ArithFormula:
    """Disjunction of 'first = i ∧ second = j' over the pairs, in increasing order"""
    return disjunction(  # type: ignore[return-value]
        [
            And(Eq(Var(first), numeral(source)), Eq(Var(second), numeral(target)))
            for source, target in sorted(set(pairs))
        ]
    )


def strict_transitive_pairs(relation: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Get the pairs of the transitive closure that are not in the relation itself"""
    pairs = frozenset(relation)
    return sorted(transitive_closure(pairs) - pairs)


def gamma_tau_schema(
    relation: Iterable[tuple[int, int]], lam: str, axioms: str
) -> tuple[ArithFormula, ArithFormula]:
    """Get 'γ(v)' and 'τ(v) = α(v) ∨ γ(v)' for the adjoined frame. 'γ(v)' holds when 'v' is the
    code of '¬λ(z)' for some 'z' reachable from the current world 'y ≠ 0' only through the
    transitive closure"""
    pairs = frozenset(relation)
    refuted = Quote(Neg(OpaqueAtom(lam, (Var("z"),))), ("z",))
    gamma: ArithFormula = Exists(
        "y",
        Exists(
            "z",
            conjunction(  # type: ignore[arg-type]
                [
                    OpaqueAtom(lam, (Var("y"),)),
                    Neg(Eq(Var("y"), Zero())),
                    relation_formula(strict_transitive_pairs(pairs), "y", "z"),
                    Eq(Var("v"), refuted),
                ]
            ),
        ),
    )
    tau = Or(OpaqueAtom(axioms, (Var("v"),)), gamma)
    return gamma, tau
