import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

from exceptions import ArityError, UncoveredPredicateError
from formulas import (
    And,
    ArithFormula,
    Bot,
    Box,
    Exists,
    Forall,
    Imp,
    ModalFormula,
    Neg,
    OpaqueAtom,
    Or,
    Pred,
    Quote,
    Term,
    Top,
    Var,
    conjunction,
    disjunction,
    free_variables,
    numeral,
    substitute,
)
from kripke import KripkeModel

ThetaBuilder = Callable[[int, Term], ArithFormula]


@dataclass(frozen=True)
class PredicateInterpretation:
    """Arithmetic formula interpreting a predicate, with the variables standing for its
    arguments"""

    variables: tuple[str, ...]
    formula: ArithFormula

    def apply(self, args: tuple[str | int, ...]) -> ArithFormula:
        """Instantiate the interpretation at the arguments of a predicate atom. Variables are
        renamed and domain constants become their numerals"""
        if len(args) != len(self.variables):
            raise ArityError(
                f"Interpretation takes {len(self.variables)} arguments but got {len(args)}"
            )
        mapping: dict[str, Term] = {
            variable: Var(arg) if isinstance(arg, str) else numeral(arg)
            for variable, arg in zip(self.variables, args)
        }
        return substitute(self.formula, mapping)


@dataclass(frozen=True)
class InterpretationTable:
    predicates: Mapping[str, PredicateInterpretation]
    provability: str


def argument_variables(arity: int) -> tuple[str, ...]:
    return tuple(f"x{position}" for position in range(arity))


def predicate_table(
    model: KripkeModel,
    arities: Mapping[str, int],
    lam: Callable[[int], ArithFormula],
    theta: ThetaBuilder,
    worlds: list[int] | None = None,
) -> dict[str, PredicateInterpretation]:
    """Interpret each predicate 'P' as the disjunction of 'λ(i) ∧ θ_k_0(x_0) ∧ ...' over the
    worlds 'i' and the elements of 'D_i' such that 'i' forces 'P(k_0, ...)'"""
    if worlds is None:
        worlds = sorted(model.worlds)

    table = {}
    for name, arity in sorted(arities.items()):
        variables = argument_variables(arity)
        disjuncts = []
        for world in worlds:
            domain = sorted(model.domains[world])
            for elements in itertools.product(domain, repeat=arity):
                if model.holds(world, name, elements):
                    disjuncts.append(
                        conjunction(
                            [lam(world)]
                            + [theta(k, Var(x)) for k, x in zip(elements, variables)]
                        )
                    )
        formula: ArithFormula = disjunction(disjuncts)  # type: ignore[arg-type,assignment]
        table[name] = PredicateInterpretation(variables, formula)
    return table


def quote(formula: ArithFormula, variables: frozenset[str] | None = None) -> Quote:
    """Code of a formula with its free variables dotted"""
    if variables is None:
        variables = free_variables(formula)
    return Quote(formula, tuple(sorted(variables)))


def interpret(table: InterpretationTable, formula: ModalFormula) -> ArithFormula:
    """Translate a modal formula, homomorphically on connectives and quantifiers. A box becomes
    the provability atom applied to the code of the translated body"""
    match formula:
        case Top() | Bot():
            return formula
        case Pred(name, args):
            if name not in table.predicates:
                raise UncoveredPredicateError(f"Predicate '{name}' has no interpretation")
            return table.predicates[name].apply(args)
        case Neg(body):
            return Neg(interpret(table, body))
        case And(left, right):
            return And(interpret(table, left), interpret(table, right))
        case Or(left, right):
            return Or(interpret(table, left), interpret(table, right))
        case Imp(left, right):
            return Imp(interpret(table, left), interpret(table, right))
        case Forall(var, body):
            return Forall(var, interpret(table, body))
        case Exists(var, body):
            return Exists(var, interpret(table, body))
        case Box(body):
            inner = interpret(table, body)
            return OpaqueAtom(table.provability, (quote(inner, free_variables(body)),))
    raise TypeError(f"Not a modal formula: {formula!r}")
