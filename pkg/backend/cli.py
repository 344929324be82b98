#!/usr/bin/env python3
"""
Command-line interface for the cofinite injection engine

Every subcommand takes its arguments on the command line and prints
canonical element text on stdout. Exit codes: 0 success, 1 parse or
validation error, 2 domain error (an operation's precondition failed).
"""

import argparse
import sys
from typing import Callable, Optional, Sequence

from loguru import logger

from models.algebra import ChainSpec, GreenRelation, Side
from services.chains import ChainEngine
from services.congruences import CongruenceEngine
from services.core_algebra import classify, natural_leq, stats
from services.expression import evaluate_text, format_element, parse_prefix
from services.green_relations import GreenRelations
from services.oracle import BruteForceOracle
from utils.errors import AlgebraError, InvalidArgument
from utils.logging import configure_logging


class CommandLineParser(argparse.ArgumentParser):
    """argparse with usage errors reported as validation errors (exit code 1)"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"error: {message}\n")


def parse_chain_arguments(arguments: Sequence[str]) -> ChainSpec:
    """Read `start=<expr>` and `prefix=[a,b,...]`; both optional"""
    start = "id"
    prefix: tuple[int, ...] = ()
    for argument in arguments:
        key, separator, value = argument.partition("=")
        if not separator:
            raise InvalidArgument(f"expected key=value, got {argument!r}")
        if key == "start":
            start = value
        elif key == "prefix":
            prefix = parse_prefix(value)
        else:
            raise InvalidArgument(f"unknown chain argument {key!r}")
    return ChainSpec(start=evaluate_text(start), prefix=prefix)


def show_bool(value: bool) -> str:
    return "true" if value else "false"


def show_generators(chain: ChainSpec, pair) -> list[str]:
    return [
        f"chain={chain.to_text()}",
        f"p={format_element(pair.p)}",
        f"q={format_element(pair.q)}",
        f"unit={format_element(pair.unit)}",
    ]


class Commands:
    """Subcommand implementations; each returns the lines to print"""

    def __init__(self):
        self.green = GreenRelations()
        self.congruences = CongruenceEngine()
        self.chains = ChainEngine()
        self.oracle = BruteForceOracle()

    def eval(self, args) -> list[str]:
        return [format_element(evaluate_text(args.expr))]

    def stats(self, args) -> list[str]:
        result = stats(evaluate_text(args.expr))
        return [f"dbar={result.dbar} rbar={result.rbar} index={result.index}"]

    def classify(self, args) -> list[str]:
        kinds = sorted(kind.value for kind in classify(evaluate_text(args.expr)))
        return [" ".join(kinds)]

    def leq(self, args) -> list[str]:
        return [show_bool(natural_leq(evaluate_text(args.left), evaluate_text(args.right)))]

    def covers(self, args) -> list[str]:
        return [show_bool(self.chains.covers(evaluate_text(args.left), evaluate_text(args.right)))]

    def green_relation(self, args) -> list[str]:
        relation = GreenRelation(args.relation)
        return [show_bool(self.green.related(relation, evaluate_text(args.left), evaluate_text(args.right)))]

    def hclass(self, args) -> list[str]:
        element = self.green.h_class_element(parse_prefix(args.domain_holes), parse_prefix(args.range_holes))
        return [format_element(element)]

    def dwitness(self, args) -> list[str]:
        return [format_element(self.green.d_witness(evaluate_text(args.left), evaluate_text(args.right)))]

    def factor(self, args) -> list[str]:
        gamma, delta = self.green.simple_factorization(evaluate_text(args.left), evaluate_text(args.right))
        return [f"gamma={format_element(gamma)}", f"delta={format_element(delta)}"]

    def sepidem(self, args) -> list[str]:
        epsilon, point = self.green.separating_idempotent(evaluate_text(args.expr))
        return [f"idempotent={format_element(epsilon)}", f"point={point}"]

    def sigma(self, args) -> list[str]:
        witness = self.congruences.sigma_related(evaluate_text(args.left), evaluate_text(args.right))
        return ["not related" if witness is None else format_element(witness)]

    def dequiv(self, args) -> list[str]:
        return [show_bool(self.congruences.d_equiv(evaluate_text(args.left), evaluate_text(args.right)))]

    def index(self, args) -> list[str]:
        return [str(self.congruences.index_hom(evaluate_text(args.expr)))]

    def unitrep(self, args) -> list[str]:
        unit, epsilon = self.congruences.unit_representative(evaluate_text(args.expr))
        return [f"unit={format_element(unit)}", f"idempotent={format_element(epsilon)}"]

    def solve(self, args) -> list[str]:
        solutions = self.congruences.solve_translation(
            Side(args.side), evaluate_text(args.left), evaluate_text(args.right)
        )
        return [format_element(chi) for chi in solutions] or ["no solutions"]

    def chain(self, args) -> list[str]:
        chain = parse_chain_arguments(args.chain_args)
        if args.chain_command == "gens":
            pair = self.chains.bicyclic_generators(chain)
            return show_generators(chain, pair)[1:]
        return [format_element(self.chains.chain_element(chain, args.position))]

    def embed(self, args) -> list[str]:
        chain, pair = self.chains.embed_finite_chain([evaluate_text(member) for member in args.members])
        return show_generators(chain, pair)

    def translate(self, args) -> list[str]:
        chain = parse_chain_arguments(args.chain_args)
        members = self.chains.translate_chain(evaluate_text(args.nu), chain, args.count)
        return [format_element(member) for member in members]

    def collapse(self, args) -> list[str]:
        chain = parse_chain_arguments(args.chain_args)
        return show_generators(*self.chains.collapse_chain(evaluate_text(args.nu), chain, args.count))

    def separate(self, args) -> list[str]:
        lower, upper, chain, pair = self.chains.separation_chain(evaluate_text(args.left), evaluate_text(args.right))
        return [f"lower={format_element(lower)}", f"upper={format_element(upper)}", *show_generators(chain, pair)]

    def window(self, args) -> list[str]:
        if args.width < 0:
            raise InvalidArgument(f"window width must be a natural, got {args.width}")
        return [self.oracle.window_eval(evaluate_text(args.expr), args.width).to_text()]


def build_parser() -> CommandLineParser:
    parser = CommandLineParser(prog="cfinj", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--log-level", default=None, help="loguru level for stderr diagnostics")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandLineParser)

    def single(name: str, handler: str, help_text: str):
        command = subparsers.add_parser(name, help=help_text)
        command.add_argument("expr")
        command.set_defaults(handler=handler)
        return command

    def pair(name: str, handler: str, help_text: str):
        command = subparsers.add_parser(name, help=help_text)
        command.add_argument("left")
        command.add_argument("right")
        command.set_defaults(handler=handler)
        return command

    single("eval", "eval", "evaluate an expression to normal form")
    single("stats", "stats", "complement sizes and index")
    single("classify", "classify", "unit / idempotent / general flags")
    single("index", "index", "value of the index homomorphism")
    single("unitrep", "unitrep", "unit representative of an index-zero element")
    single("sepidem", "sepidem", "separating idempotent for a non-identity unit")

    command = subparsers.add_parser("green", help="decide a Green's relation")
    command.add_argument("relation", choices=[relation.value for relation in GreenRelation])
    command.add_argument("left")
    command.add_argument("right")
    command.set_defaults(handler="green_relation")

    pair("dwitness", "dwitness", "element R-related to the first and L-related to the second")
    pair("factor", "factor", "gamma, delta with gamma*first*delta = second")
    pair("sigma", "sigma", "least group congruence witness")
    pair("dequiv", "dequiv", "equal index")
    pair("leq", "leq", "natural order on idempotents")
    pair("covers", "covers", "first idempotent is one step below the second")
    pair("separate", "separate", "comparable idempotents from non-H-related elements")

    command = subparsers.add_parser("hclass", help="canonical element with given complements")
    command.add_argument("domain_holes", help="[a,b,...]")
    command.add_argument("range_holes", help="[a,b,...]")
    command.set_defaults(handler="hclass")

    command = subparsers.add_parser("solve", help="solutions of a translation equation")
    command.add_argument("side", choices=[side.value for side in Side])
    command.add_argument("left")
    command.add_argument("right")
    command.set_defaults(handler="solve")

    chain = subparsers.add_parser("chain", help="omega-chains and bicyclic generators")
    chain_commands = chain.add_subparsers(dest="chain_command", required=True, parser_class=CommandLineParser)
    gens = chain_commands.add_parser("gens", help="bicyclic generators of a chain")
    gens.add_argument("chain_args", nargs="*", metavar="start=<expr>|prefix=[...]")
    elem = chain_commands.add_parser("elem", help="i-th member of a chain")
    elem.add_argument("position", type=int)
    elem.add_argument("chain_args", nargs="*", metavar="start=<expr>|prefix=[...]")
    chain.set_defaults(handler="chain")

    command = subparsers.add_parser("embed", help="embed a descending chain of idempotents")
    command.add_argument("members", nargs="+")
    command.set_defaults(handler="embed")

    for name, help_text in (("translate", "first members of nu times a chain"),
                            ("collapse", "embed 1, nu and nu times a chain")):
        command = subparsers.add_parser(name, help=help_text)
        command.add_argument("nu")
        command.add_argument("count", type=int)
        command.add_argument("chain_args", nargs="*", metavar="start=<expr>|prefix=[...]")
        command.set_defaults(handler=name)

    command = subparsers.add_parser("window", help="pointwise values on [0, W)")
    command.add_argument("expr")
    command.add_argument("width", type=int)
    command.set_defaults(handler="window")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or "WARNING")

    commands = Commands()
    handler: Callable = getattr(commands, args.handler)
    try:
        lines = handler(args)
    except AlgebraError as exc:
        logger.debug(f"{args.command} failed with {exc.code}")
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return exc.exit_code

    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
