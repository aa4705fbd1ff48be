import logging

import prometheus_client

from exceptions import NotASentenceError
from formulas import ArithFormula, free_variables

from .elimination import to_dnf
from .language import check_successor_formula

_logger = logging.getLogger("successor.decision")

prometheus_successor_decision_count = prometheus_client.Counter(
    "successor_sentence_decision",
    "Count of successor sentences decided",
)


def decide_successor(sentence: ArithFormula) -> bool:
    """Decide the truth of a sentence over the naturals with zero and successor"""
    check_successor_formula(sentence)
    free = free_variables(sentence)
    if free:
        raise NotASentenceError(f"Sentence has free variables {sorted(free)}")

    prometheus_successor_decision_count.inc()
    # The normal form of a sentence has no literals left, so it is either true or false
    result = bool(to_dnf(sentence))
    _logger.debug(f"Decided successor sentence as {result}")
    return result
