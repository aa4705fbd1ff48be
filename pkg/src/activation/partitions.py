"""
Candidate families and the equivalence relations over their atoms.

A candidate family collects the goal 'φ' and the premises 'ψ_1, ..., ψ_s' of an activation
attempt, each with its own copy of the number variables. The atoms of a family are the
propositionally atomic subformulas of the stage and of the family formulas. Plugging numbers into
the variables makes some atoms syntactically identical, and the tautological consequence only
depends on which ones. Each pair of atoms gets the formula of zero and successor saying when the
two instances are identical, and the relations that can be induced are enumerated from those.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterator, Mapping

import networkx as nx
import prometheus_client

from configs import configs
from exceptions import PartitionDomainError, PartitionLimitError
from formulas import (
    RESERVED_PREFIX,
    ArithFormula,
    Bot,
    Neg,
    Top,
    Var,
    conjunction,
    free_variables,
    prop_atomic_subformulas,
    rename_variables,
    substitute,
    substitute_numerals,
)
from identity import SubstitutionProfile, formula_identity_formula
from proptaut import PNeg, atom_key, jointly_satisfiable, translate

from .shapes import ConditionEntry
from .stage import TheoryStage

_logger = logging.getLogger("activation.partitions")

prometheus_partition_count = prometheus_client.Counter(
    "activation_partition_examined",
    "Count of equivalence relations checked for goodness",
)


@dataclass(frozen=True)
class Slot:
    """One formula of a candidate family, with its variables renamed apart"""

    index: int
    formula: ArithFormula
    variables: tuple[str, ...]
    elements: tuple[int, ...]


@dataclass(frozen=True)
class CandidateFamily:
    """The goal slot 'φ' at index 0 followed by the premise slots 'ψ_1, ..., ψ_s'"""

    world: int
    goal_entry: ConditionEntry
    slots: tuple[Slot, ...]

    @property
    def goal(self) -> Slot:
        return self.slots[0]

    @property
    def premises(self) -> tuple[Slot, ...]:
        return self.slots[1:]

    @property
    def variables(self) -> list[str]:
        return [variable for slot in self.slots for variable in slot.variables]

    def atoms(self, stage: TheoryStage) -> list[ArithFormula]:
        formulas = list(stage.proved) + [slot.formula for slot in self.slots]
        return [
            atom for atom in prop_atomic_subformulas(formulas) if not isinstance(atom, (Top, Bot))
        ]


def _slot_variable(index: int, position: int) -> str:
    return f"{RESERVED_PREFIX}b{index}_{position}"


def _make_slot(index: int, formula: ArithFormula, entry: ConditionEntry) -> Slot:
    names = {
        variable: _slot_variable(index, position)
        for position, variable in enumerate(entry.variables)
    }
    return Slot(
        index=index,
        formula=rename_variables(formula, names),
        variables=tuple(names.values()),
        elements=entry.elements,
    )


def build_family(
    world: int, goal_entry: ConditionEntry, entries: list[ConditionEntry]
) -> CandidateFamily:
    """Build the family with 'goal_entry' in the goal slot and every entry as a premise"""
    if goal_entry.goal is None:
        raise ValueError("The goal entry must have a negated consequent")
    slots = [_make_slot(0, goal_entry.goal, goal_entry)]
    for index, entry in enumerate(entries, start=1):
        slots.append(_make_slot(index, entry.consequent, entry))
    return CandidateFamily(world=world, goal_entry=goal_entry, slots=tuple(slots))


@dataclass(frozen=True)
class Partition:
    """Equivalence relation given by its classes"""

    classes: tuple[frozenset[ArithFormula], ...]

    def __post_init__(self) -> None:
        seen: set[ArithFormula] = set()
        for members in self.classes:
            if not members:
                raise PartitionDomainError("Partition classes must be nonempty")
            if seen & members:
                raise PartitionDomainError("Partition classes must be disjoint")
            seen |= members

    @cached_property
    def class_index(self) -> dict[ArithFormula, int]:
        return {atom: index for index, members in enumerate(self.classes) for atom in members}

    @property
    def elements(self) -> frozenset[ArithFormula]:
        return frozenset(self.class_index)

    def same_class(self, first: ArithFormula, second: ArithFormula) -> bool:
        return self.class_index[first] == self.class_index[second]


def induced_partition(
    atoms: list[ArithFormula], assignment: Mapping[str, int]
) -> Partition:
    """Group the atoms whose instances under the assignment are the same formula"""
    groups: dict[ArithFormula, set[ArithFormula]] = {}
    for atom in atoms:
        groups.setdefault(substitute_numerals(atom, assignment), set()).add(atom)
    return Partition(tuple(frozenset(members) for members in groups.values()))


def _class_keys(partition: Partition, variables: set[str]) -> dict[int, Hashable]:
    """Propositional variable of each class. A class with an atom that doesn't mention the family
    variables shares the variable of that atom in the usual translation, so the proved formulas
    keep their translation"""
    keys: dict[int, Hashable] = {}
    for index, members in enumerate(partition.classes):
        fixed = [atom_key(atom) for atom in members if not free_variables(atom) & variables]
        keys[index] = min(fixed) if fixed else -(index + 1)
    return keys


def is_good(partition: Partition, family: CandidateFamily, stage: TheoryStage) -> bool:
    """Check if the proved formulas and the premises, with the atoms collapsed to their classes,
    tautologically imply the collapsed goal"""
    atoms = family.atoms(stage)
    if partition.elements != frozenset(atoms):
        raise PartitionDomainError("The partition is not over the atoms of the family")

    prometheus_partition_count.inc()
    keys = _class_keys(partition, set(family.variables))

    def collapse(atom: ArithFormula) -> Hashable:
        return keys[partition.class_index[atom]]

    formulas = [translate(formula) for formula in stage.proved]
    formulas += [translate(slot.formula, collapse) for slot in family.premises]
    formulas.append(PNeg(translate(family.goal.formula, collapse)))
    return not jointly_satisfiable(formulas)


class AtomRelations:
    """The atoms of a family with the identity formula of every pair. The identity formula of
    '(α, β)' has the family variables free and holds exactly when the instances of 'α' and 'β'
    are the same formula"""

    def __init__(self, family: CandidateFamily, stage: TheoryStage) -> None:
        self.family = family
        self.atoms = family.atoms(stage)
        self.pairs: dict[tuple[int, int], ArithFormula] = {}

        variables = set(family.variables)
        for first, second in itertools.combinations(range(len(self.atoms)), 2):
            self.pairs[first, second] = self._identity(
                self.atoms[first], self.atoms[second], variables
            )

    @staticmethod
    def _identity(left: ArithFormula, right: ArithFormula, variables: set[str]) -> ArithFormula:
        left_free = free_variables(left)
        right_free = free_variables(right)
        copies = {name: f"{name}_w" for name in sorted(right_free & variables)}
        shared = (left_free | right_free) - variables
        profile = SubstitutionProfile(
            u_vars=tuple(sorted(left_free & variables)),
            w_vars=tuple(copies.values()),
            shared=tuple(sorted(shared)),
        )
        compiled = formula_identity_formula(left, rename_variables(right, copies), profile)
        return substitute(compiled, {copy: Var(name) for name, copy in copies.items()})

    @cached_property
    def open_pairs(self) -> dict[tuple[int, int], ArithFormula]:
        """Pairs whose identity depends on the values of the variables"""
        return {
            pair: formula
            for pair, formula in self.pairs.items()
            if not isinstance(formula, (Top, Bot))
        }

    def _blocks(self) -> list[list[int]]:
        """Group the atoms that are always identified"""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.atoms)))
        graph.add_edges_from(
            pair for pair, formula in self.pairs.items() if isinstance(formula, Top)
        )
        return sorted(sorted(component) for component in nx.connected_components(graph))

    def _compatible(self, first: list[int], second: list[int]) -> bool:
        return not any(
            isinstance(self.pairs[min(a, b), max(a, b)], Bot) for a in first for b in second
        )

    def partitions(self) -> Iterator[Partition]:
        """Enumerate the equivalence relations that agree with every constant identity formula.
        Atoms that can't be identified with any other atom are always alone in their class"""
        blocks = self._blocks()
        movable = [
            block
            for block in blocks
            if any(other is not block and self._compatible(block, other) for other in blocks)
        ]
        fixed = [block for block in blocks if block not in movable]

        limit = configs.limits.partition_max_atoms
        if len(movable) > limit:
            raise PartitionLimitError(
                f"{len(movable)} atoms have undetermined classes, over the limit of {limit}"
            )
        _logger.debug(
            f"World {self.family.world}: {len(self.atoms)} atoms, {len(movable)} with undetermined "
            "classes"
        )

        def to_partition(groups: list[list[list[int]]]) -> Partition:
            classes = [
                frozenset(self.atoms[index] for block in group for index in block)
                for group in groups
            ]
            classes += [frozenset(self.atoms[index] for index in block) for block in fixed]
            return Partition(tuple(classes))

        def grow(position: int, groups: list[list[list[int]]]) -> Iterator[Partition]:
            if position == len(movable):
                yield to_partition(groups)
                return
            block = movable[position]
            for group in groups:
                if all(self._compatible(block, member) for member in group):
                    group.append(block)
                    yield from grow(position + 1, groups)
                    group.pop()
            groups.append([block])
            yield from grow(position + 1, groups)
            groups.pop()

        yield from grow(0, [])

    def partition_formula(self, partition: Partition) -> ArithFormula:
        """Formula of the family variables saying that the induced relation is 'partition'"""
        conjuncts: list[ArithFormula] = []
        for (first, second), formula in self.open_pairs.items():
            if partition.same_class(self.atoms[first], self.atoms[second]):
                conjuncts.append(formula)
            else:
                conjuncts.append(Neg(formula))
        return conjunction(conjuncts)  # type: ignore[return-value]
