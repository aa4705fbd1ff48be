import json

import pytest

from activation import ExplicitPool, GodelPool, TheoryStage
from exceptions import InputFileError, InvalidOracleError, NonCumulativeStageError
from formulas import godel_encode, parse_arith
from solovaysim import Injection, ScriptedOracle, contradiction, load_oracle
from tests.test_utils import assert_message_in_log

F1 = parse_arith("0 = 0")
F2 = parse_arith("@Q -> 0 = 0")
POOL = ExplicitPool((F2,))

ORACLE_DATA = {
    "worlds": [1, 2],
    "relation": [[1, 2]],
    "d": 0,
    "stages": [
        {"index": 0, "proved": ["0 = 0"], "pool": ["@Q -> 0 = 0"]},
        {"index": 3, "proved": ["0 = 0", "@Q -> 0 = 0"], "pool": ["@Q -> 0 = 0"]},
    ],
    "inject_contradiction_at": {"stage": 5, "worlds": [2]},
}


@pytest.fixture
def oracle() -> ScriptedOracle:
    return ScriptedOracle(
        worlds=frozenset({1, 2}),
        relation=frozenset({(1, 2)}),
        d=0,
        snapshots=(TheoryStage.build(2, [F1], POOL), TheoryStage.build(4, [F1, F2], POOL)),
    )


def test_injection_formulas():
    """'Injection.formulas' should give the contradiction followed by the activation conditions"""
    injection = Injection(stage=3, worlds=(1, 2))

    assert injection.formulas("L") == [
        contradiction(),
        parse_arith("@L(1) -> ~0 = 1"),
        parse_arith("@L(2) -> ~0 = 1"),
    ]


@pytest.mark.parametrize(
    "index, expected",
    [
        (-1, ()),
        (0, ()),
        (1, ()),
        (2, (F1,)),
        (3, (F1,)),
        (4, (F1, F2)),
        (10, (F1, F2)),
    ],
)
def test_oracle_stage(oracle, index, expected):
    """'ScriptedOracle.stage' should hold the latest snapshot at or before the index"""
    stage = oracle.stage(index)

    assert stage.index == index
    assert stage.proved == expected


def test_oracle_stage_before_snapshots(oracle):
    """'ScriptedOracle.stage' should use the pool of the first snapshot before it"""
    assert oracle.stage(1).pool == POOL
    assert oracle.stage(-1).pool is None


def test_oracle_stage_cached(oracle):
    """'ScriptedOracle.stage' should build each stage once"""
    assert oracle.stage(3) is oracle.stage(3)


def test_oracle_injection():
    """'ScriptedOracle.stage' should add the injected formulas from the injection stage on and
    extend the pool with them"""
    oracle = ScriptedOracle(
        worlds=frozenset({1}),
        relation=frozenset(),
        d=0,
        snapshots=(TheoryStage.build(0, [F1], POOL),),
        injection=Injection(stage=2, worlds=(1,)),
        lam_name="L",
    )

    assert oracle.stage(1).proved == (F1,)
    assert oracle.stage(2).proved == (F1, contradiction(), parse_arith("@L(1) -> ~0 = 1"))
    assert oracle.stage(2).in_pool(contradiction())
    assert not oracle.stage(1).in_pool(contradiction())


def test_oracle_injection_godel_pool():
    """'ScriptedOracle.stage' should keep code bounded pools as they are"""
    oracle = ScriptedOracle(
        worlds=frozenset({1}),
        relation=frozenset(),
        d=0,
        snapshots=(TheoryStage.build(0, [], GodelPool(10**6)),),
        injection=Injection(stage=0),
    )

    assert oracle.stage(0).pool == GodelPool(10**6)
    assert oracle.stage(0).proved == (contradiction(),)


def test_oracle_not_cumulative():
    """'ScriptedOracle' should raise a 'NonCumulativeStageError' when a snapshot drops formulas"""
    with pytest.raises(NonCumulativeStageError, match="Stage 2 drops 1 formulas proved at stage 0"):
        ScriptedOracle(
            worlds=frozenset({1}),
            relation=frozenset(),
            d=0,
            snapshots=(TheoryStage.build(0, [F1, F2]), TheoryStage.build(2, [F2])),
        )


def test_oracle_indexes_not_increasing():
    """'ScriptedOracle' should raise an 'InvalidOracleError' when the snapshot indexes don't increase"""
    with pytest.raises(InvalidOracleError, match="must be strictly increasing"):
        ScriptedOracle(
            worlds=frozenset({1}),
            relation=frozenset(),
            d=0,
            snapshots=(TheoryStage.build(2, [F1]), TheoryStage.build(2, [F1])),
        )


def test_oracle_universe(oracle):
    """'ScriptedOracle.universe' should list the pool members ordered by code"""
    universe = oracle.universe()

    assert universe is not None
    assert set(universe) == {F1, F2, parse_arith("@Q")}
    assert universe == sorted(universe, key=godel_encode)


def test_oracle_universe_injection():
    """'ScriptedOracle.universe' should include the injected formulas and their subformulas"""
    oracle = ScriptedOracle(
        worlds=frozenset({1}),
        relation=frozenset(),
        d=0,
        snapshots=(TheoryStage.build(0, [F1], ExplicitPool((F1,))),),
        injection=Injection(stage=1, worlds=(1,)),
        lam_name="L",
    )

    assert set(oracle.universe() or []) == {
        F1,
        contradiction(),
        parse_arith("~0 = 1"),
        parse_arith("@L(1)"),
        parse_arith("@L(1) -> ~0 = 1"),
    }


def test_oracle_universe_unrestricted():
    """'ScriptedOracle.universe' should be 'None' when some stage accepts every formula"""
    unrestricted = ScriptedOracle(
        worlds=frozenset({1}),
        relation=frozenset(),
        d=0,
        snapshots=(TheoryStage.build(0, [F1], POOL), TheoryStage.build(1, [F1])),
    )
    empty = ScriptedOracle(worlds=frozenset({1}), relation=frozenset(), d=0)

    assert unrestricted.universe() is None
    assert empty.universe() is None


def test_oracle_consistent_through(oracle):
    """'ScriptedOracle.consistent_through' should be false from the injection stage on"""
    injected = ScriptedOracle(
        worlds=oracle.worlds,
        relation=oracle.relation,
        d=0,
        snapshots=oracle.snapshots,
        injection=Injection(stage=3),
    )

    assert oracle.consistent_through(100)
    assert injected.consistent_through(2)
    assert not injected.consistent_through(3)


def test_load_oracle(temp_dir, lam_name):
    """'load_oracle' should build the oracle of an oracle file"""
    path = temp_dir / "oracle.json"
    path.write_text(json.dumps(ORACLE_DATA))

    oracle = load_oracle(path)
    assert oracle.worlds == frozenset({1, 2})
    assert oracle.relation == frozenset({(1, 2)})
    assert oracle.lam_name == lam_name
    assert oracle.injection == Injection(stage=5, worlds=(2,))
    assert oracle.stage(2).proved == (F1,)
    assert oracle.stage(3).proved == (F1, F2)
    assert oracle.stage(5).proved[-1] == parse_arith(f"@{lam_name}(2) -> ~0 = 1")


def test_load_oracle_not_object(temp_dir):
    """'load_oracle' should raise an 'InputFileError' when the file is not a JSON object"""
    path = temp_dir / "oracle.json"
    path.write_text("[1, 2]")

    with pytest.raises(InputFileError, match="an oracle file must contain a JSON object"):
        load_oracle(path)


@pytest.mark.parametrize(
    "changes, message",
    [
        ({"worlds": [0, 1]}, "worlds must be positive"),
        (
            {"stages": [{"index": 2}, {"index": 1}]},
            "stage indexes must be strictly increasing",
        ),
        ({"d": -1}, "greater than or equal to 0"),
    ],
)
def test_load_oracle_invalid_fields(caplog, temp_dir, changes, message):
    """'load_oracle' should raise an 'InputFileError' and log the validation errors when the file
    doesn't follow the oracle format"""
    path = temp_dir / "oracle.json"
    path.write_text(json.dumps(ORACLE_DATA | changes))

    with pytest.raises(InputFileError, match="invalid oracle file"):
        load_oracle(path)
    assert_message_in_log(caplog, message)
