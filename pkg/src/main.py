import argparse
import logging
import sys
from typing import Callable

import prometheus_client

import commands
import utils.log as log
from configs import configs
from data_models.command_config import CommandConfig
from utils.exception_handling import catch_exceptions

_logger = logging.getLogger("main")

Handler = Callable[[argparse.Namespace], commands.CommandResult]


def _check(args: argparse.Namespace) -> commands.CommandResult:
    return commands.check_command(args.model, args.world, args.formula)


def _embed(args: argparse.Namespace) -> commands.CommandResult:
    return commands.embed_command(args.model, args.sentence, args.world, args.mode, args.out)


def _decide_succ(args: argparse.Namespace) -> commands.CommandResult:
    return commands.decide_succ_command(args.sentence, args.show_qe)


def _tc(args: argparse.Namespace) -> commands.CommandResult:
    return commands.tc_command(args.premises, args.goal)


def _identity_formula(args: argparse.Namespace) -> commands.CommandResult:
    return commands.identity_formula_command(
        args.left, args.right, args.uvars, args.wvars, args.shared, args.kind
    )


def _activated(args: argparse.Namespace) -> commands.CommandResult:
    return commands.activated_command(
        args.context, args.world, args.stage, args.show_sentence, args.brute
    )


def _simulate(args: argparse.Namespace) -> commands.CommandResult:
    return commands.simulate_command(args.oracle, args.horizon, args.trace)


def _log_level(verbosity: int) -> log.LogLevel:
    if verbosity < 0:
        return "error"
    if verbosity == 0:
        return "warning"
    if verbosity == 1:
        return "default"
    return "debug"


def command_config(args: argparse.Namespace) -> CommandConfig:
    """Build the validated command options from the parsed arguments"""
    inputs = [
        getattr(args, name)
        for name in ("model", "premises", "context", "oracle")
        if getattr(args, name, None) is not None
    ]
    output = getattr(args, "out", None) or getattr(args, "trace", None)
    return CommandConfig(
        command=args.command,
        inputs=inputs,
        output=output,
        format=args.format,
        verbosity=-1 if args.quiet else args.verbose,
    )


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse and return the execution arguments"""
    parser = argparse.ArgumentParser(prog="modarith")
    parser.add_argument(
        "--format",
        choices=["human", "json"],
        default=configs.output_format,
        help="Output format. Defaults to 'output_format' in the configs file.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log more. Can be repeated."
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors.")
    parser.add_argument(
        "--metrics", action="store_true", help="Write the collected metrics to stderr at the end."
    )
    command_parser = parser.add_subparsers(dest="command", required=True)

    # Check parser
    check_parser = command_parser.add_parser("check", help="Check if a world forces a formula")
    check_parser.set_defaults(func=_check)
    check_parser.add_argument("--model", required=True, help="Path to the JSON model file.")
    check_parser.add_argument("--world", required=True, type=int)
    check_parser.add_argument("--formula", required=True, help="Modal formula.")

    # Embed parser
    embed_parser = command_parser.add_parser(
        "embed", help="Build the arithmetical interpretation refuting a sentence"
    )
    embed_parser.set_defaults(func=_embed)
    embed_parser.add_argument("--model", required=True, help="Path to the JSON model file.")
    embed_parser.add_argument("--sentence", required=True, help="Modal sentence.")
    embed_parser.add_argument("--world", required=True, type=int)
    embed_parser.add_argument(
        "--mode",
        required=True,
        choices=["s4", "s3", "sigma1", "sigma2"],
        help=(
            "'s4' for constant domain models, 's3' for conversely well-founded frames. "
            "'sigma1' and 'sigma2' are aliases of them."
        ),
    )
    embed_parser.add_argument("--out", help="Optional. Path to write the bundle JSON.")

    # Decide successor parser
    succ_parser = command_parser.add_parser(
        "decide-succ", help="Decide a sentence of zero and successor"
    )
    succ_parser.set_defaults(func=_decide_succ)
    succ_parser.add_argument("sentence")
    succ_parser.add_argument(
        "--show-qe", action="store_true", help="Also print the quantifier free form."
    )

    # Tautological consequence parser
    tc_parser = command_parser.add_parser(
        "tc", help="Check a tautological consequence of arithmetic formulas"
    )
    tc_parser.set_defaults(func=_tc)
    tc_parser.add_argument(
        "--premises", required=True, help="Path to a text file with one premise per line."
    )
    tc_parser.add_argument("--goal", required=True)

    # Identity formula parser
    identity_parser = command_parser.add_parser(
        "identity-formula", help="Build the formula expressing identity of substituted instances"
    )
    identity_parser.set_defaults(func=_identity_formula)
    identity_parser.add_argument("--left", required=True)
    identity_parser.add_argument("--right", required=True)
    identity_parser.add_argument("--uvars", help="Comma separated variables of the left side.")
    identity_parser.add_argument("--wvars", help="Comma separated variables of the right side.")
    identity_parser.add_argument("--shared", help="Comma separated variables kept free.")
    identity_parser.add_argument("--kind", choices=["term", "formula"], default="term")

    # Activated parser
    activated_parser = command_parser.add_parser(
        "activated", help="Decide if a world is activated at a stage"
    )
    activated_parser.set_defaults(func=_activated)
    activated_parser.add_argument(
        "--context", required=True, help="Path to the JSON context file."
    )
    activated_parser.add_argument("--world", required=True, type=int)
    activated_parser.add_argument("--stage", required=True, type=int)
    activated_parser.add_argument(
        "--show-sentence", action="store_true", help="Also print the deciding sentences."
    )
    activated_parser.add_argument(
        "--brute", type=int, help="Optional. Also search for witnesses up to this number."
    )

    # Simulate parser
    simulate_parser = command_parser.add_parser("simulate", help="Run the trace simulation")
    simulate_parser.set_defaults(func=_simulate)
    simulate_parser.add_argument("--oracle", required=True, help="Path to the JSON oracle file.")
    simulate_parser.add_argument("--horizon", type=int, default=configs.simulation.default_horizon)
    simulate_parser.add_argument("--trace", help="Optional. Path to write the trace JSON.")

    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    log.setup(_log_level(-1 if args.quiet else args.verbose))

    exit_code = 0
    with catch_exceptions(_logger) as outcome:
        config = command_config(args)
        handler: Handler = args.func
        result = handler(args)
        print(result.render(config.format))
        exit_code = result.exit_code

    if outcome.exception is not None:
        exit_code = outcome.exit_code

    if args.metrics:
        sys.stderr.write(prometheus_client.generate_latest().decode())

    return exit_code


def start() -> None:
    sys.exit(main())
