"""
The θ formulas of the constant-domain construction.

For a domain D = {0, ..., d}, 'θ_k(x)' is 'x = k' for every 'k ≠ 0' and 'θ_0(x)' is
'x = 0 ∨ d < x', so every natural number satisfies exactly one of them.
"""

import logging
from dataclasses import dataclass

from exceptions import ElementOutsideDomainError, InvalidModelError, ThetaFamilyError
from formulas import (
    RESERVED_PREFIX,
    And,
    ArithFormula,
    Eq,
    Exists,
    Forall,
    Lt,
    Or,
    Term,
    Var,
    Zero,
    disjunction,
    numeral,
    substitute_numerals,
    succ_power,
)
from successor import decide_successor

_logger = logging.getLogger("embedding.theta")


@dataclass(frozen=True)
class ThetaFamily:
    d: int

    @property
    def domain(self) -> range:
        return range(self.d + 1)

    def formula(self, k: int, term: Term) -> ArithFormula:
        """Get 'θ_k' applied to 'term'"""
        self._check_element(k)
        if k != 0:
            return Eq(term, numeral(k))
        return Or(Eq(term, Zero()), Lt(numeral(self.d), term))

    def successor_formula(self, k: int, term: Term) -> ArithFormula:
        """Get 'θ_k' applied to 'term' in the language of zero and successor, writing 'd < x' as
        'x = s^(d+1)(w)' for some 'w'"""
        self._check_element(k)
        if k != 0:
            return Eq(term, numeral(k))
        witness = f"{RESERVED_PREFIX}w"
        return Or(
            Eq(term, Zero()), Exists(witness, Eq(term, succ_power(Var(witness), self.d + 1)))
        )

    def holds(self, k: int, value: int) -> bool:
        self._check_element(k)
        if k != 0:
            return value == k
        return value == 0 or value > self.d

    def element_of(self, value: int) -> int:
        """Get the 'k' whose θ formula the value satisfies"""
        if 0 < value <= self.d:
            return value
        return 0

    def match(self, formula: ArithFormula, term: Term) -> int | None:
        """Get the 'k' such that the formula is exactly 'θ_k' applied to 'term'"""
        for k in self.domain:
            if self.formula(k, term) == formula:
                return k
        return None

    def _check_element(self, k: int) -> None:
        if k not in self.domain:
            raise ElementOutsideDomainError(
                f"Element {k} is not in the domain {{0, ..., {self.d}}}"
            )


def verify_theta(family: ThetaFamily) -> None:
    """Check that each θ_k has an instance, that no two of them share one and that every natural
    satisfies one of them, deciding the zero and successor versions as sentences. The values up to
    d + 1 are also checked against 'holds', which evaluates the printed formulas"""
    variable = f"{RESERVED_PREFIX}x"
    x = Var(variable)
    for k in family.domain:
        if not decide_successor(Exists(variable, family.successor_formula(k, x))):
            raise ThetaFamilyError(f"θ_{k} has no instance for d={family.d}")
        for other in family.domain:
            if other <= k:
                continue
            shared = And(family.successor_formula(k, x), family.successor_formula(other, x))
            if decide_successor(Exists(variable, shared)):
                raise ThetaFamilyError(f"θ_{k} and θ_{other} share an instance for d={family.d}")

    instances = [family.successor_formula(k, x) for k in family.domain]
    covering: ArithFormula = disjunction(instances)  # type: ignore[arg-type,assignment]
    if not decide_successor(Forall(variable, covering)):
        raise ThetaFamilyError(f"The θ formulas don't cover the naturals for d={family.d}")

    # Every θ formula only tells apart 0, ..., d and the values above d
    for value in range(family.d + 2):
        for k in family.domain:
            instance = substitute_numerals(family.successor_formula(k, x), {variable: value})
            if decide_successor(instance) is not family.holds(k, value):
                raise ThetaFamilyError(
                    f"θ_{k} disagrees with its successor version on {value} for d={family.d}"
                )


def make_theta(d: int) -> ThetaFamily:
    """Build the θ family for the domain {0, ..., d}"""
    if d < 0:
        raise InvalidModelError(f"The largest domain element must be a natural, got {d}")
    family = ThetaFamily(d)
    verify_theta(family)
    _logger.debug(f"Built θ family for d={d}")
    return family
