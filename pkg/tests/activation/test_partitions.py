import itertools

import pytest

from activation import (
    ActivationContext,
    AtomRelations,
    CandidateFamily,
    Partition,
    TheoryStage,
    build_family,
    condition_entries,
    induced_partition,
    is_good,
    match_entry,
)
from configs import configs
from exceptions import PartitionDomainError, PartitionLimitError
from formulas import Bot, parse_arith, substitute_numerals
from successor import decide_successor

ENTRY = parse_arith("all x (@Lam(1) /\\ x = 1 -> ~@P(x))")
P_ONE = parse_arith("@P(1)")
P_GOAL = parse_arith("@P(_b0_0)")
P_PREMISE = parse_arith("@P(_b1_0)")


@pytest.fixture
def ctx() -> ActivationContext:
    return ActivationContext(
        worlds=frozenset({1, 2}),
        relation=frozenset({(1, 2)}),
        d=1,
        stage=TheoryStage.build(0, [ENTRY, P_ONE]),
        lam_name="Lam",
    )


@pytest.fixture
def family(ctx) -> CandidateFamily:
    entries = condition_entries(ctx.stage, 1, ctx)
    return build_family(1, entries[0], entries)


def _partition(*groups: tuple[str, ...]) -> Partition:
    names = {"entry": ENTRY, "one": P_ONE, "goal": P_GOAL, "premise": P_PREMISE}
    return Partition(tuple(frozenset(names[name] for name in group) for group in groups))


def test_partition_errors():
    """'Partition' should raise a 'PartitionDomainError' for empty or overlapping classes"""
    with pytest.raises(PartitionDomainError, match="nonempty"):
        Partition((frozenset(),))

    with pytest.raises(PartitionDomainError, match="disjoint"):
        Partition((frozenset({P_ONE, P_GOAL}), frozenset({P_GOAL})))


def test_partition_same_class():
    """'Partition.same_class' should compare the classes of two elements"""
    partition = _partition(("one", "goal"), ("premise",))

    assert partition.same_class(P_ONE, P_GOAL)
    assert not partition.same_class(P_ONE, P_PREMISE)
    assert partition.elements == frozenset({P_ONE, P_GOAL, P_PREMISE})


def test_build_family(family):
    """'build_family' should put the negated formula of the goal entry in the goal slot and give
    each slot its own variables"""
    assert family.world == 1
    assert family.goal.formula == P_GOAL
    assert family.goal.variables == ("_b0_0",)
    assert family.goal.elements == (1,)
    assert [slot.formula for slot in family.premises] == [parse_arith("~@P(_b1_0)")]
    assert family.variables == ["_b0_0", "_b1_0"]


def test_build_family_not_negated(ctx):
    """'build_family' should raise a 'ValueError' when the goal entry has no negated consequent"""
    entry = match_entry(parse_arith("@Lam(1) -> @Q"), 1, ctx)
    assert entry is not None

    with pytest.raises(ValueError, match="negated consequent"):
        build_family(1, entry, [entry])


def test_family_atoms(ctx, family):
    """'CandidateFamily.atoms' should list the atoms of the stage and of the slots"""
    assert family.atoms(ctx.stage) == [ENTRY, P_ONE, P_GOAL, P_PREMISE]


def test_induced_partition():
    """'induced_partition' should group the atoms with the same instance"""
    atoms = [P_ONE, P_GOAL, P_PREMISE]

    partition = induced_partition(atoms, {"_b0_0": 1, "_b1_0": 2})
    assert partition.same_class(P_ONE, P_GOAL)
    assert not partition.same_class(P_ONE, P_PREMISE)

    partition = induced_partition(atoms, {"_b0_0": 3, "_b1_0": 3})
    assert partition.same_class(P_GOAL, P_PREMISE)
    assert len(partition.classes) == 2


@pytest.mark.parametrize(
    "groups, expected",
    [
        ((("entry",), ("one",), ("goal",), ("premise",)), False),
        ((("entry",), ("one", "goal"), ("premise",)), True),
        ((("entry",), ("one", "premise"), ("goal",)), True),
        ((("entry",), ("one",), ("goal", "premise")), False),
        ((("entry",), ("one", "goal", "premise")), True),
    ],
)
def test_is_good(ctx, family, groups, expected):
    """'is_good' should check the consequence with the atoms collapsed to their classes"""
    assert is_good(_partition(*groups), family, ctx.stage) is expected


def test_is_good_wrong_atoms(ctx, family):
    """'is_good' should raise a 'PartitionDomainError' for a partition over other atoms"""
    with pytest.raises(PartitionDomainError, match="not over the atoms"):
        is_good(_partition(("one", "goal"), ("premise",)), family, ctx.stage)


def test_is_good_premise_is_goal():
    """'is_good' should accept every partition when the goal is proved"""
    ctx = ActivationContext(
        worlds=frozenset({1}),
        relation=frozenset(),
        d=0,
        stage=TheoryStage.build(0, [parse_arith("0 = 1"), parse_arith("@Lam(1) -> ~0 = 1")]),
        lam_name="Lam",
    )
    entries = condition_entries(ctx.stage, 1, ctx)
    family = build_family(1, entries[0], entries)
    relations = AtomRelations(family, ctx.stage)

    partitions = list(relations.partitions())
    assert len(partitions) == 1
    assert all(is_good(partition, family, ctx.stage) for partition in partitions)


def test_atom_relations_pairs(ctx, family):
    """'AtomRelations' should give each pair the formula saying when the instances are
    identical"""
    relations = AtomRelations(family, ctx.stage)

    assert isinstance(relations.pairs[0, 1], Bot)
    assert set(relations.open_pairs) == {(1, 2), (1, 3), (2, 3)}

    for goal, premise in itertools.product(range(4), repeat=2):
        values = {"_b0_0": goal, "_b1_0": premise}
        for (first, second), formula in relations.open_pairs.items():
            identical = substitute_numerals(
                relations.atoms[first], values
            ) == substitute_numerals(relations.atoms[second], values)
            assert decide_successor(substitute_numerals(formula, values)) is identical


def test_atom_relations_partitions(ctx, family):
    """'AtomRelations.partitions' should enumerate the relations of the atoms that may be
    identified, leaving the others alone"""
    relations = AtomRelations(family, ctx.stage)
    partitions = list(relations.partitions())

    assert len(partitions) == 5
    assert len(set(partitions)) == 5
    assert all(frozenset({ENTRY}) in partition.classes for partition in partitions)


def test_partition_formula(ctx, family):
    """'AtomRelations.partition_formula' should hold exactly for the values inducing the
    partition"""
    relations = AtomRelations(family, ctx.stage)
    atoms = relations.atoms

    for partition in relations.partitions():
        formula = relations.partition_formula(partition)
        for goal, premise in itertools.product(range(4), repeat=2):
            values = {"_b0_0": goal, "_b1_0": premise}
            induced = induced_partition(atoms, values)
            expected = all(
                induced.same_class(first, second) == partition.same_class(first, second)
                for first, second in itertools.combinations(atoms, 2)
            )
            assert decide_successor(substitute_numerals(formula, values)) is expected


def test_partitions_limit(monkeypatch, ctx, family):
    """'AtomRelations.partitions' should raise a 'PartitionLimitError' when too many atoms have
    undetermined classes"""
    monkeypatch.setattr(configs.limits, "partition_max_atoms", 2)
    relations = AtomRelations(family, ctx.stage)

    with pytest.raises(PartitionLimitError, match="3 atoms have undetermined classes"):
        list(relations.partitions())
