import itertools
import logging
from typing import Hashable, Iterable, Mapping

import networkx as nx
import prometheus_client

from configs import configs
from exceptions import TooManyVariablesError
from formulas import ArithFormula

from .translation import PAnd, PBot, PImp, PNeg, POr, PropFormula, PTop, PVar, translate

_logger = logging.getLogger("proptaut")

prometheus_tautology_check_count = prometheus_client.Counter(
    "proptaut_truth_table_check",
    "Count of truth table checks",
)


def prop_variables(formula: PropFormula) -> set[Hashable]:
    """Get the keys of the variables of a propositional formula"""
    match formula:
        case PVar(key):
            return {key}
        case PTop() | PBot():
            return set()
        case PNeg(body):
            return prop_variables(body)
        case PAnd(left, right) | POr(left, right) | PImp(left, right):
            return prop_variables(left) | prop_variables(right)
    raise TypeError(f"Not a propositional formula: {formula!r}")


def evaluate(formula: PropFormula, assignment: Mapping[Hashable, bool]) -> bool:
    match formula:
        case PVar(key):
            return assignment[key]
        case PTop():
            return True
        case PBot():
            return False
        case PNeg(body):
            return not evaluate(body, assignment)
        case PAnd(left, right):
            return evaluate(left, assignment) and evaluate(right, assignment)
        case POr(left, right):
            return evaluate(left, assignment) or evaluate(right, assignment)
        case PImp(left, right):
            return not evaluate(left, assignment) or evaluate(right, assignment)
    raise TypeError(f"Not a propositional formula: {formula!r}")


def _check_limit(variables: set[Hashable]) -> None:
    limit = configs.limits.tautology_max_variables
    if len(variables) > limit:
        raise TooManyVariablesError(
            f"Formula has {len(variables)} variables, over the limit of {limit}"
        )


def _satisfiable(formulas: list[PropFormula]) -> bool:
    """Check if some assignment makes every formula true"""
    variables: set[Hashable] = set().union(*(prop_variables(formula) for formula in formulas))
    _check_limit(variables)
    prometheus_tautology_check_count.inc()

    keys = list(variables)
    for values in itertools.product((False, True), repeat=len(keys)):
        assignment = dict(zip(keys, values))
        if all(evaluate(formula, assignment) for formula in formulas):
            return True
    return False


def is_tautology(formula: PropFormula) -> bool:
    """Check if the formula is true under every assignment"""
    return not _satisfiable([PNeg(formula)])


def is_satisfiable(formula: PropFormula) -> bool:
    return _satisfiable([formula])


def _conjuncts(formula: PropFormula) -> list[PropFormula]:
    match formula:
        case PAnd(left, right):
            return _conjuncts(left) + _conjuncts(right)
        case PNeg(POr(left, right)):
            return _conjuncts(PNeg(left)) + _conjuncts(PNeg(right))
        case PNeg(PImp(left, right)):
            return _conjuncts(left) + _conjuncts(PNeg(right))
        case PNeg(PNeg(body)):
            return _conjuncts(body)
    return [formula]


def _components(formulas: list[PropFormula]) -> list[list[PropFormula]]:
    """Group formulas into components that share no variable"""
    graph = nx.Graph()
    for index, formula in enumerate(formulas):
        graph.add_node(("formula", index))
        for key in prop_variables(formula):
            graph.add_edge(("formula", index), ("variable", key))

    components = []
    for nodes in nx.connected_components(graph):
        indexes = sorted(index for kind, index in nodes if kind == "formula")
        components.append([formulas[index] for index in indexes])
    return components


def jointly_satisfiable(formulas: Iterable[PropFormula]) -> bool:
    """Check if the formulas are satisfiable together, deciding each group of formulas that share
    variables independently"""
    conjuncts = [conjunct for formula in formulas for conjunct in _conjuncts(formula)]
    return all(_satisfiable(component) for component in _components(conjuncts))


def tc_consequence(premises: Iterable[ArithFormula], goal: ArithFormula) -> bool:
    """Check if the goal is a tautological consequence of the premises, that is, if the
    translation of the conjunction of the premises implying the goal is a tautology"""
    translated = [translate(premise) for premise in premises]
    translated.append(PNeg(translate(goal)))
    result = not jointly_satisfiable(translated)
    _logger.debug(f"Tautological consequence from {len(translated) - 1} premises: {result}")
    return result
