"""
Enumeration 'ξ' of the formulas, where every formula appears infinitely many times.

Without a finite universe, 'ξ_u' is the formula coded by the first component of 'u' in the Cantor
pairing, and '⊤' when that component isn't a formula code. A formula with code 'c' is then 'ξ_u'
for every 'u = pair(c, n)'. With a finite universe, 'ξ' cycles through it.
"""

from typing import Sequence

from exceptions import InvalidBoundError
from formulas import ArithFormula, Top, godel_decode, is_formula_code, unpair


def xi(u: int, universe: Sequence[ArithFormula] | None = None) -> ArithFormula:
    if u < 0:
        raise InvalidBoundError(f"The enumeration index must be a natural, got {u}")

    if universe is not None:
        if not universe:
            return Top()
        return universe[u % len(universe)]

    code, _ = unpair(u)
    if is_formula_code(code):
        return godel_decode(code)
    return Top()


def recurrence_index(
    formula: ArithFormula, start: int, universe: Sequence[ArithFormula]
) -> int | None:
    """Get the first 'u ≥ start' with 'ξ_u' equal to the formula, in a finite universe"""
    if formula not in universe:
        return None
    position = list(universe).index(formula)
    cycle = len(universe)
    return start + (position - start) % cycle
