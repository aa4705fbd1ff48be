import pytest
from hypothesis import given

from activation import (
    ActivationContext,
    ExplicitPool,
    TheoryStage,
    activation_sentences,
    candidate_families,
    decide_activated,
)
from exceptions import StageMismatchError, UnknownWorldError
from formulas import Top, is_sentence, parse_arith
from successor import decide_successor, is_successor_formula
from tests.strategies import activation_contexts, prop_formulas


def _context(proved: list[str], d: int = 1, pool: list[str] | None = None) -> ActivationContext:
    stage_pool = None if pool is None else ExplicitPool(tuple(parse_arith(text) for text in pool))
    return ActivationContext(
        worlds=frozenset({1, 2}),
        relation=frozenset({(1, 2)}),
        d=d,
        stage=TheoryStage.build(0, [parse_arith(text) for text in proved], stage_pool),
        lam_name="Lam",
    )


@pytest.mark.parametrize(
    "proved, world, expected",
    [
        (["0 = 1", "@Lam(1) -> ~0 = 1"], 1, True),
        (["0 = 1", "@Lam(1) -> ~0 = 1"], 2, False),
        (["~0 = 1", "@Lam(2) -> ~~0 = 1"], 2, True),
        ([], 1, False),
        (["@Lam(1) -> ~0 = 1"], 1, False),
        (["@Lam(1) -> 0 = 1", "0 = 1"], 1, False),
        (["all x (@Lam(1) /\\ x = 1 -> ~@P(x))", "@P(1)"], 1, True),
        (["all x (@Lam(1) /\\ (x = 0 \\/ 1 < x) -> ~@P(x))", "@P(1)"], 1, False),
        (["all x (@Lam(1) /\\ x = 1 -> ~@P(x))", "@Lam(1) -> ~~@P(1)"], 1, True),
        (["all x (@Lam(1) /\\ (x = 0 \\/ 1 < x) -> ~@P(x))", "@Lam(1) -> ~~@P(1)"], 1, False),
        (["all x (@Lam(1) /\\ (x = 0 \\/ 1 < x) -> ~@P(x))", "@Lam(1) -> ~~@P(3)"], 1, True),
        (["all x (@Lam(1) /\\ (x = 0 \\/ 1 < x) -> ~(@P(x) -> @P(0)))"], 1, True),
        (["@A(y)", "@Lam(1) -> ~@A(y)"], 1, True),
        (["@A(z)", "@Lam(1) -> ~@A(y)"], 1, False),
        (["all x (@Lam(1) /\\ x = 1 -> ~@P(x, y))", "@P(1, y)"], 1, True),
        (["all x (@Lam(1) /\\ x = 1 -> ~@P(x, y))", "@P(1, z)"], 1, False),
    ],
)
def test_decide_activated(proved, world, expected):
    """'decide_activated' should decide whether numbers satisfying the θ formulas make the goal
    a tautological consequence"""
    assert decide_activated(world, 0, _context(proved)) is expected


def test_decide_activated_goal_outside_pool():
    """'decide_activated' should ignore the condition formulas whose consequent is outside the
    pool"""
    proved = ["0 = 1", "@Lam(1) -> ~0 = 1"]
    ctx = _context(proved, pool=proved)
    assert decide_activated(1, 0, ctx)

    stage = TheoryStage(
        index=0, proved=ctx.stage.proved, pool=ExplicitPool((parse_arith("@Lam(1) -> ~@Q"),))
    )
    assert not decide_activated(1, 0, ctx.with_stage(stage))


@pytest.mark.parametrize(
    "world, stage_index, exception, message",
    [
        (3, 0, UnknownWorldError, "World 3 is not in the frame"),
        (1, 1, StageMismatchError, "Requested stage 1 but the context is at stage 0"),
    ],
)
def test_decide_activated_errors(world, stage_index, exception, message):
    """'decide_activated' should check the world and the stage of the request"""
    with pytest.raises(exception, match=message):
        decide_activated(world, stage_index, _context(["0 = 1"]))


def test_candidate_families():
    """'candidate_families' should build one family per goal entry with every entry as a
    premise"""
    ctx = _context(["@Lam(1) -> ~0 = 1", "@Lam(1) -> @Q", "@Lam(1) -> ~@R", "@Lam(2) -> ~@R"])
    families = candidate_families(1, ctx)

    assert [family.goal.formula for family in families] == [
        parse_arith("0 = 1"),
        parse_arith("@R"),
    ]
    assert all(len(family.premises) == 3 for family in families)


def test_activation_sentences():
    """'activation_sentences' should give a closed sentence of zero and successor per family"""
    ctx = _context(["all x (@Lam(1) /\\ (x = 0 \\/ 1 < x) -> ~@P(x))", "@Lam(1) -> ~~@P(3)"])
    sentences = activation_sentences(1, 0, ctx)

    assert len(sentences) == 2
    for activation in sentences:
        assert is_sentence(activation.sentence)
        assert is_successor_formula(activation.sentence)
        assert activation.good_partitions > 0
        assert decide_successor(activation.sentence)


def test_activation_sentence_without_variables():
    """'activation_sentences' should give '⊤' for a family without variables whose relation is
    good"""
    sentences = activation_sentences(1, 0, _context(["0 = 1", "@Lam(1) -> ~0 = 1"]))
    assert [activation.sentence for activation in sentences] == [Top()]


@given(activation_contexts(), prop_formulas((parse_arith("@P(0)"), parse_arith("@Q")), 1))
def test_decide_activated_monotone(ctx, extra):
    """'decide_activated' should stay true when the next stage proves more formulas"""
    later = ctx.with_stage(TheoryStage.build(1, [*ctx.stage.proved, extra]))
    for world in sorted(ctx.worlds):
        if decide_activated(world, 0, ctx):
            assert decide_activated(world, 1, later)
