from dataclasses import field

from pydantic import model_validator
from pydantic.dataclasses import dataclass
from typing_extensions import Self


@dataclass
class ValuationItem:
    world: int
    pred: str
    args: list[int] = field(default_factory=list)


@dataclass
class ModelFile:
    """
    JSON description of a finite Kripke model.
    - `worlds`: list of world numbers.
    - `relation`: list of `[source, target]` pairs.
    - `domains`: map from world number to its domain. Keys may be strings, as in JSON objects.
    - `domain`: shorthand for a constant domain shared by every world. Exactly one of `domain` and
    `domains` must be provided.
    - `valuation`: list of atoms `{"world": w, "pred": "P", "args": [...]}` that hold.
    """

    worlds: list[int]
    relation: list[tuple[int, int]] = field(default_factory=list)
    domains: dict[int, list[int]] | None = None
    domain: list[int] | None = None
    valuation: list[ValuationItem] = field(default_factory=list)

    @model_validator(mode="after")
    def check_domains(self) -> Self:
        if (self.domains is None) == (self.domain is None):
            raise ValueError("exactly one of 'domain' and 'domains' must be provided")
        return self
