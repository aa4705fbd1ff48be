from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from exceptions import InvalidModelError

ValuationEntry = tuple[int, str, tuple[int, ...]]


@dataclass(frozen=True)
class KripkeModel:
    """Finite Kripke model for quantified modal logic. Each world has its own domain of naturals
    and the valuation lists the atoms '(world, predicate, arguments)' that hold"""

    worlds: frozenset[int]
    relation: frozenset[tuple[int, int]]
    domains: Mapping[int, frozenset[int]]
    valuation: frozenset[ValuationEntry] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.worlds:
            raise InvalidModelError("A model must have at least one world")
        if any(world < 0 for world in self.worlds):
            raise InvalidModelError("Worlds must be natural numbers")

        if set(self.domains) != set(self.worlds):
            raise InvalidModelError(
                f"Domains are given for worlds {sorted(self.domains)} but the worlds are "
                f"{sorted(self.worlds)}"
            )
        for world, domain in self.domains.items():
            if not domain:
                raise InvalidModelError(f"The domain of world {world} is empty")
            if any(element < 0 for element in domain):
                raise InvalidModelError(f"The domain of world {world} has negative elements")

        for source, target in self.relation:
            if source not in self.worlds or target not in self.worlds:
                raise InvalidModelError(f"Relation pair ({source}, {target}) is outside the worlds")
            if not self.domains[source] <= self.domains[target]:
                raise InvalidModelError(
                    f"Domains must grow along the relation, but D_{source} is not included in "
                    f"D_{target}"
                )

        arities: dict[str, int] = {}
        for world, name, args in self.valuation:
            if world not in self.worlds:
                raise InvalidModelError(f"Valuation entry for unknown world {world}")
            if not set(args) <= self.domains[world]:
                raise InvalidModelError(
                    f"Valuation entry {name}{list(args)} at world {world} uses elements outside "
                    "its domain"
                )
            if arities.setdefault(name, len(args)) != len(args):
                raise InvalidModelError(f"Predicate '{name}' is used with different arities")

    @classmethod
    def build(
        cls,
        worlds: Iterable[int],
        relation: Iterable[tuple[int, int]],
        domains: Mapping[int, Iterable[int]] | Iterable[int],
        valuation: Iterable[tuple[int, str, Iterable[int]]] = (),
    ) -> "KripkeModel":
        """Build a model from plain collections. A single iterable of elements as 'domains' gives
        a constant domain model"""
        world_set = frozenset(worlds)
        if isinstance(domains, Mapping):
            domain_map = {world: frozenset(domain) for world, domain in domains.items()}
        else:
            constant = frozenset(domains)
            domain_map = {world: constant for world in world_set}
        return cls(
            worlds=world_set,
            relation=frozenset((source, target) for source, target in relation),
            domains=domain_map,
            valuation=frozenset((world, name, tuple(args)) for world, name, args in valuation),
        )

    @cached_property
    def is_constant_domain(self) -> bool:
        return len(set(self.domains.values())) == 1

    @cached_property
    def predicate_arities(self) -> dict[str, int]:
        return {name: len(args) for _, name, args in self.valuation}

    @cached_property
    def _successors(self) -> dict[int, tuple[int, ...]]:
        successors: dict[int, list[int]] = {world: [] for world in self.worlds}
        for source, target in self.relation:
            successors[source].append(target)
        return {world: tuple(sorted(targets)) for world, targets in successors.items()}

    def successors(self, world: int) -> tuple[int, ...]:
        """Get the worlds accessible from 'world', in increasing order"""
        return self._successors[world]

    def holds(self, world: int, name: str, args: tuple[int, ...]) -> bool:
        return (world, name, args) in self.valuation

    @cached_property
    def max_element(self) -> int:
        return max(max(domain) for domain in self.domains.values())

    def to_dict(self) -> dict[str, object]:
        """Render the model in the JSON model file format"""
        return {
            "worlds": sorted(self.worlds),
            "relation": [list(pair) for pair in sorted(self.relation)],
            "domains": {str(world): sorted(self.domains[world]) for world in sorted(self.worlds)},
            "valuation": [
                {"world": world, "pred": name, "args": list(args)}
                for world, name, args in sorted(self.valuation)
            ],
        }
