import logging
from typing import Literal

from activation import (
    activation_sentences,
    brute_force_activated,
    decide_activated,
    load_context,
)
from formulas import parse_arith, parse_term, print_arith
from identity import SubstitutionProfile, formula_identity_formula, term_identity_formula
from proptaut import tc_consequence
from successor import decide_successor, eliminate_quantifiers
from utils.files import read_formula_lines

from .results import CommandResult, decided

_logger = logging.getLogger("commands.decisions")


def _names(text: str | None) -> tuple[str, ...]:
    if not text:
        return ()
    return tuple(name.strip() for name in text.split(",") if name.strip())


def decide_succ_command(sentence_text: str, show_qe: bool = False) -> CommandResult:
    """Decide a sentence of zero and successor"""
    sentence = parse_arith(sentence_text)
    answer = decide_successor(sentence)
    result = decided(answer, {"sentence": sentence_text})
    if show_qe:
        eliminated = print_arith(eliminate_quantifiers(sentence))
        result.data["eliminated"] = eliminated
        result.text = f"{result.text}\n{eliminated}"
    return result


def tc_command(premises_path: str, goal_text: str) -> CommandResult:
    """Check if the goal is a tautological consequence of the premises in the file"""
    premises = [parse_arith(line) for line in read_formula_lines(premises_path)]
    goal = parse_arith(goal_text)
    answer = tc_consequence(premises, goal)
    _logger.debug(f"Checked consequence from {len(premises)} premises")
    return decided(answer, {"premises": len(premises), "goal": goal_text}, ("yes", "no"))


def identity_formula_command(
    left_text: str,
    right_text: str,
    u_vars: str | None,
    w_vars: str | None,
    shared: str | None,
    kind: Literal["term", "formula"] = "term",
) -> CommandResult:
    """Build the formula of zero and successor that holds exactly when the substituted instances
    of the two objects are identical"""
    profile = SubstitutionProfile(
        u_vars=_names(u_vars), w_vars=_names(w_vars), shared=_names(shared)
    )
    if kind == "term":
        identity = term_identity_formula(parse_term(left_text), parse_term(right_text), profile)
    else:
        identity = formula_identity_formula(
            parse_arith(left_text), parse_arith(right_text), profile
        )

    printed = print_arith(identity)
    return CommandResult(
        text=printed,
        data={
            "kind": kind,
            "left": left_text,
            "right": right_text,
            "u_vars": list(profile.u_vars),
            "w_vars": list(profile.w_vars),
            "shared": list(profile.shared),
            "formula": printed,
        },
    )


def activated_command(
    context_path: str,
    world: int,
    stage: int,
    show_sentence: bool = False,
    brute: int | None = None,
) -> CommandResult:
    """Decide if a world is activated at a stage of the context file"""
    ctx = load_context(context_path)
    answer = decide_activated(world, stage, ctx)
    result = decided(answer, {"world": world, "stage": stage})

    lines = [result.text]
    if show_sentence:
        sentences = [
            print_arith(activation.sentence)
            for activation in activation_sentences(world, stage, ctx)
        ]
        result.data["sentences"] = sentences
        lines += sentences

    if brute is not None:
        witness = brute_force_activated(world, stage, ctx, brute)
        found = witness is not None
        result.data["brute_force"] = {
            "bound": brute,
            "found": found,
            "assignment": None if witness is None else witness.assignment,
        }
        if found != answer:
            _logger.warning(
                f"The search up to {brute} {'finds' if found else 'misses'} a witness while the "
                f"decision is {answer}"
            )
        lines.append(f"brute force up to {brute}: {'found' if found else 'not found'}")

    result.text = "\n".join(lines)
    return result
