"""
Statements the embedding relies on but that can't be checked here.

Each obligation is a concrete arithmetic statement for the worlds, pairs and elements of the
model, with what is claimed about it: provable in PA, true in the standard model, or not provable
in the theory. Identifiers are built from what the statement says, so they are stable across
runs. The reference names the numbered clause of the construction the statement comes from,
so the same reference is shared by every instance of a clause.
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Literal

from formulas import (
    ArithFormula,
    Eq,
    Exists,
    Forall,
    Imp,
    ModalFormula,
    Neg,
    OpaqueAtom,
    Term,
    Var,
    conjunction,
    disjunction,
    numeral,
    print_arith,
)
from kripke import KripkeModel, forces

from .interpretation import quote

Claim = Literal["provable", "true", "unprovable", "represents_axioms"]

ThetaAtom = Callable[[int, Term], ArithFormula]


@dataclass(frozen=True)
class Obligation:
    identifier: str
    claim: Claim
    statement: ArithFormula
    supports: str
    reference: str

    def to_dict(self) -> dict[str, str]:
        return {
            "id": self.identifier,
            "claim": self.claim,
            "statement": print_arith(self.statement),
            "supports": self.supports,
            "reference": self.reference,
        }


def _lam(name: str, term: Term) -> ArithFormula:
    return OpaqueAtom(name, (term,))


def _any(items: list[ArithFormula]) -> ArithFormula:
    return disjunction(items)  # type: ignore[return-value]


def _all(items: list[ArithFormula]) -> ArithFormula:
    return conjunction(items)  # type: ignore[return-value]


def _provable_in(provability: str, formula: ArithFormula) -> ArithFormula:
    return OpaqueAtom(provability, (quote(formula),))


def _consistent_with(provability: str, formula: ArithFormula) -> ArithFormula:
    return Neg(_provable_in(provability, Neg(formula)))


def solovay_obligations(
    worlds: Iterable[int], closure: frozenset[tuple[int, int]], lam_name: str, axioms: str
) -> list[Obligation]:
    """Defining properties of the trace predicate of the transitive adjoined frame"""
    supports = "trace predicate of the adjoined frame"
    obligations = [
        Obligation(
            "solovay-exists",
            "provable",
            Exists("x", _lam(lam_name, Var("x"))),
            supports,
            "solovay.1",
        ),
        Obligation(
            "solovay-unique",
            "provable",
            Forall(
                "x",
                Forall(
                    "y",
                    Imp(
                        _all([_lam(lam_name, Var("x")), _lam(lam_name, Var("y"))]),
                        Eq(Var("x"), Var("y")),
                    ),
                ),
            ),
            supports,
            "solovay.2",
        ),
    ]
    for source, target in sorted(closure):
        obligations.append(
            Obligation(
                f"solovay-consistent-{source}-{target}",
                "provable",
                Imp(
                    _lam(lam_name, numeral(source)),
                    _consistent_with(axioms, _lam(lam_name, numeral(target))),
                ),
                supports,
                "solovay.3",
            )
        )
    for world in sorted(worlds):
        if world == 0:
            continue
        above = [
            _lam(lam_name, numeral(target)) for source, target in sorted(closure) if source == world
        ]
        obligations.append(
            Obligation(
                f"solovay-complete-{world}",
                "provable",
                Imp(_lam(lam_name, numeral(world)), _provable_in(axioms, _any(above))),
                supports,
                "solovay.4",
            )
        )
    return obligations


def tau_obligations(
    worlds: Iterable[int],
    relation: frozenset[tuple[int, int]],
    closure: frozenset[tuple[int, int]],
    lam_name: str,
    provability: str,
    tau: ArithFormula,
) -> list[Obligation]:
    """Properties of the provability predicate built from 'τ'"""
    supports = "provability predicate of τ"
    obligations = []
    for source, target in sorted(closure - relation):
        if source != 0:
            obligations.append(
                Obligation(
                    f"tau-refutes-{source}-{target}",
                    "provable",
                    Imp(
                        _lam(lam_name, numeral(source)),
                        _provable_in(provability, Neg(_lam(lam_name, numeral(target)))),
                    ),
                    supports,
                    "tau-basic.1",
                )
            )
    for world in sorted(worlds):
        if world == 0:
            continue
        successors = [
            _lam(lam_name, numeral(target)) for start, target in sorted(relation) if start == world
        ]
        obligations.append(
            Obligation(
                f"tau-successors-{world}",
                "provable",
                Imp(_lam(lam_name, numeral(world)), _provable_in(provability, _any(successors))),
                supports,
                "tau-basic.2",
            )
        )
    for source, target in sorted(relation):
        obligations.append(
            Obligation(
                f"tau-consistent-{source}-{target}",
                "provable",
                Imp(
                    _lam(lam_name, numeral(source)),
                    _consistent_with(provability, _lam(lam_name, numeral(target))),
                ),
                supports,
                "tau-basic.3",
            )
        )
    root = _lam(lam_name, numeral(0))
    obligations.append(Obligation("tau-root-true", "true", root, supports, "tau-basic.4"))
    obligations.append(Obligation("tau-axioms", "represents_axioms", tau, supports, "tau-basic.5"))
    return obligations


def theta_obligations(
    domains: dict[int, frozenset[int]], lam_name: str, theta: ThetaAtom
) -> list[Obligation]:
    """Properties of the opaque θ formulas"""
    supports = "θ formulas of the varying domains"
    elements = sorted(set().union(*domains.values()))
    obligations = []
    for world in sorted(domains):
        for k in sorted(domains[world]):
            obligations.append(
                Obligation(
                    f"theta-exists-{world}-{k}",
                    "provable",
                    Imp(_lam(lam_name, numeral(world)), Exists("x", theta(k, Var("x")))),
                    supports,
                    "AD.1",
                )
            )
        obligations.append(
            Obligation(
                f"theta-covers-{world}",
                "provable",
                Imp(
                    _lam(lam_name, numeral(world)),
                    Forall("x", _any([theta(k, Var("x")) for k in elements])),
                ),
                supports,
                "AD.2",
            )
        )
    for position, k in enumerate(elements):
        for other in elements[position + 1 :]:
            obligations.append(
                Obligation(
                    f"theta-disjoint-{k}-{other}",
                    "provable",
                    Forall(
                        "x",
                        Neg(_all([theta(k, Var("x")), theta(other, Var("x"))])),
                    ),
                    supports,
                    "AD.3",
                )
            )
    return obligations


def truth_obligations(
    model: KripkeModel,
    sentence: ModalFormula,
    interpreted: ArithFormula,
    lam_name: str,
    reference: str,
) -> list[Obligation]:
    """The interpretation of the sentence is true exactly at the worlds that force it. The first
    clause of 'reference' covers the worlds that force the sentence and the second one the rest"""
    supports = "truth of the interpretation at each world"
    obligations = []
    for world in sorted(model.worlds):
        trace = _lam(lam_name, numeral(world))
        if forces(model, world, sentence):
            statement, clause = Imp(trace, interpreted), f"{reference}.1"
        else:
            statement, clause = Imp(trace, Neg(interpreted)), f"{reference}.2"
        obligations.append(Obligation(f"truth-{world}", "provable", statement, supports, clause))
    return obligations


def unprovability_obligations(
    worlds: Iterable[int], interpreted: ArithFormula, lam_name: str
) -> list[Obligation]:
    """No trace value is refuted by the theory, and so the interpretation of the sentence is not
    provable"""
    obligations = [
        Obligation(
            f"lambda-unrefuted-{world}",
            "unprovable",
            Neg(_lam(lam_name, numeral(world))),
            "the trace predicate can take every value",
            "Proph3.2",
        )
        for world in sorted(worlds)
        if world != 0
    ]
    obligations.append(
        Obligation(
            "sentence-unprovable",
            "unprovable",
            interpreted,
            "refutation at the root",
            "embedding.2, Proph3.2",
        )
    )
    return obligations
