from dataclasses import dataclass, field, replace
from functools import cached_property

from configs import configs
from embedding.theta import ThetaFamily, make_theta
from exceptions import InvalidModelError
from formulas import OpaqueAtom, numeral
from kripke import KripkeModel

from .stage import TheoryStage


@dataclass(frozen=True)
class ActivationContext:
    """What the activation and readiness decisions need: the frame '(W, R)', the domain
    {0, ..., d}, the name of the trace predicate atom and the current theory stage"""

    worlds: frozenset[int]
    relation: frozenset[tuple[int, int]]
    d: int
    stage: TheoryStage
    lam_name: str = field(default_factory=lambda: configs.atom_names.lam)

    def __post_init__(self) -> None:
        for source, target in self.relation:
            if source not in self.worlds or target not in self.worlds:
                raise InvalidModelError(f"Relation pair ({source}, {target}) is outside the worlds")
        if self.d < 0:
            raise InvalidModelError(f"The largest domain element must be a natural, got {self.d}")

    @classmethod
    def from_model(
        cls, model: KripkeModel, stage: TheoryStage, lam_name: str | None = None
    ) -> "ActivationContext":
        """Build a context from a model whose domains are all included in {0, ..., d} with 'd'
        its largest element"""
        elements = set().union(*model.domains.values())
        d = model.max_element
        if elements != set(range(d + 1)):
            raise InvalidModelError(
                f"The elements of the model must be 0, ..., {d}, got {sorted(elements)}"
            )
        return cls(
            worlds=model.worlds,
            relation=model.relation,
            d=d,
            stage=stage,
            lam_name=lam_name or configs.atom_names.lam,
        )

    @cached_property
    def theta(self) -> ThetaFamily:
        return make_theta(self.d)

    def lam(self, world: int) -> OpaqueAtom:
        """Get the atom 'λ(j)' of a world"""
        return OpaqueAtom(self.lam_name, (numeral(world),))

    def successors(self, world: int) -> list[int]:
        return sorted(target for source, target in self.relation if source == world)

    def with_stage(self, stage: TheoryStage) -> "ActivationContext":
        return replace(self, stage=stage)
