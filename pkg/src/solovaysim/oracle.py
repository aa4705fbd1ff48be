"""
Scripted theories for the simulation.

A scripted oracle replaces the proof predicate of the theory: it lists the formulas proved up to
each stage as snapshots, and a stage holds the latest snapshot at or before it. Optionally, a
contradiction is added from a given stage on, together with the activation conditions of some
worlds.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from pydantic import ValidationError

from activation import ExplicitPool, Pool, TheoryStage, empty_stage
from activation.loader import stage_from_item
from configs import configs
from data_models.oracle_file import OracleFile
from exceptions import InputFileError, InvalidOracleError, NonCumulativeStageError
from formulas import (
    ArithFormula,
    Eq,
    Imp,
    Neg,
    OpaqueAtom,
    Zero,
    godel_encode,
    numeral,
)
from utils.exception_handling import log_validation_error
from utils.files import read_json_file

_logger = logging.getLogger("solovaysim.oracle")


class TheoryOracle(Protocol):
    worlds: frozenset[int]
    relation: frozenset[tuple[int, int]]
    d: int
    lam_name: str

    def stage(self, index: int) -> TheoryStage: ...

    def universe(self) -> list[ArithFormula] | None: ...

    def consistent_through(self, index: int) -> bool: ...


def contradiction() -> ArithFormula:
    return Eq(Zero(), numeral(1))


@dataclass(frozen=True)
class Injection:
    """'0 = 1' and 'λ(j) → ¬(0 = 1)' for each of the worlds are proved from 'stage' on"""

    stage: int
    worlds: tuple[int, ...] = ()

    def formulas(self, lam_name: str) -> list[ArithFormula]:
        return [contradiction()] + [
            Imp(OpaqueAtom(lam_name, (numeral(world),)), Neg(contradiction()))
            for world in self.worlds
        ]


def _extend_pool(pool: Pool | None, formulas: list[ArithFormula]) -> Pool | None:
    if isinstance(pool, ExplicitPool):
        return ExplicitPool(pool.listed + tuple(f for f in formulas if f not in pool))
    return pool


@dataclass(frozen=True)
class ScriptedOracle:
    worlds: frozenset[int]
    relation: frozenset[tuple[int, int]]
    d: int
    snapshots: tuple[TheoryStage, ...] = ()
    injection: Injection | None = None
    lam_name: str = field(default_factory=lambda: configs.atom_names.lam)
    _stages: dict[int, TheoryStage] = field(
        default_factory=dict, init=False, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        previous: TheoryStage | None = None
        for snapshot in self.snapshots:
            if previous is not None:
                if snapshot.index <= previous.index:
                    raise InvalidOracleError("Snapshot indexes must be strictly increasing")
                missing = previous.proved_set - snapshot.proved_set
                if missing:
                    raise NonCumulativeStageError(
                        f"Stage {snapshot.index} drops {len(missing)} formulas proved at stage "
                        f"{previous.index}"
                    )
            previous = snapshot

    def _snapshot(self, index: int) -> TheoryStage | None:
        found = None
        for snapshot in self.snapshots:
            if snapshot.index > index:
                break
            found = snapshot
        return found

    def stage(self, index: int) -> TheoryStage:
        """Get the theory at stage 'index'. Stages before 0 are empty"""
        if index < 0:
            return empty_stage(index)
        if index in self._stages:
            return self._stages[index]

        snapshot = self._snapshot(index)
        if snapshot is not None:
            proved = list(snapshot.proved)
            pool = snapshot.pool
        else:
            proved = []
            pool = self.snapshots[0].pool if self.snapshots else None

        if self.injection is not None and index >= self.injection.stage:
            injected = self.injection.formulas(self.lam_name)
            proved += injected
            pool = _extend_pool(pool, injected)

        stage = TheoryStage.build(index, proved, pool)
        self._stages[index] = stage
        return stage

    def universe(self) -> list[ArithFormula] | None:
        """Get the formulas of the pools, ordered by Gödel code. 'None' when some stage accepts
        every formula"""
        if not self.snapshots or any(snapshot.pool is None for snapshot in self.snapshots):
            return None

        formulas: set[ArithFormula] = set()
        for snapshot in self.snapshots:
            formulas.update(snapshot.pool.members())  # type: ignore[union-attr]
        if self.injection is not None:
            for formula in self.injection.formulas(self.lam_name):
                formulas.update(ExplicitPool((formula,)).members())
        return sorted(formulas, key=godel_encode)

    def consistent_through(self, index: int) -> bool:
        """Check if no contradiction is injected at or before stage 'index'"""
        return self.injection is None or self.injection.stage > index


def oracle_from_file_data(oracle_file: OracleFile) -> ScriptedOracle:
    snapshots = tuple(stage_from_item(item) for item in oracle_file.stages)
    injection = None
    if oracle_file.inject_contradiction_at is not None:
        item = oracle_file.inject_contradiction_at
        injection = Injection(stage=item.stage, worlds=tuple(item.worlds))

    return ScriptedOracle(
        worlds=frozenset(oracle_file.worlds),
        relation=frozenset(oracle_file.relation),
        d=oracle_file.d,
        snapshots=snapshots,
        injection=injection,
        lam_name=oracle_file.lam or configs.atom_names.lam,
    )


def load_oracle(path: str | Path) -> ScriptedOracle:
    """Load a scripted oracle from a JSON oracle file"""
    data = read_json_file(path)
    if not isinstance(data, dict):
        raise InputFileError(str(path), "an oracle file must contain a JSON object")

    try:
        oracle_file = OracleFile(**data)
    except ValidationError as e:
        log_validation_error(_logger, e)
        raise InputFileError(str(path), "invalid oracle file") from e
    except TypeError as e:
        raise InputFileError(str(path), f"invalid oracle file: {e}") from e

    oracle = oracle_from_file_data(oracle_file)
    _logger.debug(f"Loaded oracle with {len(oracle.snapshots)} stages from '{path}'")
    return oracle
