import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Protocol

from formulas import (
    And,
    ArithFormula,
    Exists,
    Forall,
    Imp,
    Neg,
    Or,
    formulas_up_to,
    godel_encode,
)

_logger = logging.getLogger("activation.stage")


class Pool(Protocol):
    """Finite set of formulas a stage may use"""

    def __contains__(self, formula: object) -> bool: ...

    def formulas(self) -> list[ArithFormula]: ...

    def members(self) -> list[ArithFormula]: ...


@dataclass(frozen=True)
class GodelPool:
    """The formulas whose Gödel code is at most 'height'"""

    height: int

    def __contains__(self, formula: object) -> bool:
        try:
            return godel_encode(formula) <= self.height  # type: ignore[arg-type]
        except TypeError:
            return False

    def formulas(self) -> list[ArithFormula]:
        return formulas_up_to(self.height)

    def members(self) -> list[ArithFormula]:
        return self.formulas()


def _subformulas(formula: ArithFormula) -> Iterator[ArithFormula]:
    yield formula
    match formula:
        case Neg(body) | Forall(_, body) | Exists(_, body):
            yield from _subformulas(body)
        case And(left, right) | Or(left, right) | Imp(left, right):
            yield from _subformulas(left)
            yield from _subformulas(right)


@dataclass(frozen=True)
class ExplicitPool:
    """A listed set of formulas. Like the code bounded pools, it is closed under subformulas, so a
    formula is in the pool if it is a subformula of a listed one"""

    listed: tuple[ArithFormula, ...]

    @cached_property
    def _members(self) -> frozenset[ArithFormula]:
        return frozenset(
            subformula for formula in self.listed for subformula in _subformulas(formula)
        )

    def __contains__(self, formula: object) -> bool:
        return formula in self._members

    def formulas(self) -> list[ArithFormula]:
        return list(self.listed)

    def members(self) -> list[ArithFormula]:
        """Get the listed formulas and their subformulas, ordered by Gödel code"""
        return sorted(self._members, key=godel_encode)


@dataclass(frozen=True)
class TheoryStage:
    """The formulas proved up to stage 'index'. A stage without a pool accepts every formula"""

    index: int
    proved: tuple[ArithFormula, ...] = ()
    pool: Pool | None = field(default=None, compare=False)

    def in_pool(self, formula: ArithFormula) -> bool:
        return self.pool is None or formula in self.pool

    @cached_property
    def proved_set(self) -> frozenset[ArithFormula]:
        return frozenset(self.proved)

    @classmethod
    def build(
        cls, index: int, proved: Iterable[ArithFormula], pool: Pool | None = None
    ) -> "TheoryStage":
        """Build a stage, dropping repeated formulas and the ones outside the pool"""
        kept: dict[ArithFormula, None] = {}
        for formula in proved:
            if pool is not None and formula not in pool:
                _logger.warning(
                    f"Stage {index}: dropping a proved formula outside the pool "
                    f"(code {godel_encode(formula)})"
                )
                continue
            kept.setdefault(formula, None)
        return cls(index=index, proved=tuple(kept), pool=pool)


def empty_stage(index: int = -1) -> TheoryStage:
    return TheoryStage(index=index)


def newly_proved(stage: TheoryStage, previous: TheoryStage) -> list[ArithFormula]:
    """Get the formulas of 'stage' that are not in 'previous', in stage order"""
    return [formula for formula in stage.proved if formula not in previous.proved_set]
