from dataclasses import field

from pydantic import Field, model_validator
from pydantic.dataclasses import dataclass
from typing_extensions import Self


@dataclass
class StageItem:
    """
    A snapshot of the theory.
    - `index`: stage number. The snapshot holds from this stage until the next listed one.
    - `proved`: formulas proved up to this stage, in the arithmetic grammar.
    - `pool`: formulas the stage may use. Subformulas of listed formulas are also in the pool.
    - `pool_height`: alternative to `pool`, every formula with Gödel code up to this height.
    When neither is provided, the stage accepts every formula.
    """

    index: int = Field(ge=0)
    proved: list[str] = field(default_factory=list)
    pool: list[str] | None = None
    pool_height: int | None = Field(default=None, gt=0)

    @model_validator(mode="after")
    def check_pool(self) -> Self:
        if self.pool is not None and self.pool_height is not None:
            raise ValueError("at most one of 'pool' and 'pool_height' can be provided")
        return self


@dataclass
class InjectionItem:
    """
    Contradiction added to the theory.
    - `stage`: first stage where `0 = 1` is proved.
    - `worlds`: worlds `j` whose activation condition `λ(j) → ¬(0 = 1)` is proved along with it.
    """

    stage: int = Field(ge=0)
    worlds: list[int] = field(default_factory=list)


@dataclass
class OracleFile:
    """
    JSON description of a scripted theory for the simulation.
    - `worlds`, `relation`: the frame. Worlds must be positive.
    - `d`: largest element of the domain `{0, ..., d}`.
    - `lam`: name of the trace predicate atom. Defaults to `atom_names.lam` in `configs.yaml`.
    - `stages`: snapshots with increasing indexes.
    - `inject_contradiction_at`: optional contradiction added from a stage on.
    """

    worlds: list[int]
    relation: list[tuple[int, int]] = field(default_factory=list)
    d: int = Field(default=0, ge=0)
    lam: str | None = None
    stages: list[StageItem] = field(default_factory=list)
    inject_contradiction_at: InjectionItem | None = None

    @model_validator(mode="after")
    def check_stages(self) -> Self:
        indexes = [stage.index for stage in self.stages]
        if indexes != sorted(set(indexes)):
            raise ValueError("stage indexes must be strictly increasing")
        if any(world <= 0 for world in self.worlds):
            raise ValueError("worlds must be positive, 0 is the value of the trace before moving")
        return self
