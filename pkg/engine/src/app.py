"""
quadgraph - Command Line Entry Point
Builds orthogonality graphs over finite quadratic spaces and verifies claims about them
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError as PydanticValidationError

from config.constants import LOG_LEVEL, MAX_GRAPH_VERTICES
from config.models import RunConfig
from services.cache import SubspaceCache
from services.field import parse_modulus
from usecases import CommandOutput, CommandUseCase, cache_command, verify_suite
from usecases.commands import EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE
from utils.errors import ConfigError, FieldSpecError, FrameworkError, ValidationError

logger = logging.getLogger(__name__)

GRAPH_COMMANDS = ["build", "stats", "cliques", "orbits", "spectrum", "verify-identity",
                  "gap-test", "verify-all", "export"]
USAGE_ERRORS = (ValidationError, FieldSpecError, ConfigError)


def _instance_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="ambient dimension")
    common.add_argument("--k", type=int, help="subspace dimension")
    common.add_argument("--q", type=int, help="field size, an odd prime power")
    common.add_argument("--modulus", help="irreducible modulus coefficients, constant term first (e.g. 1,0,1)")
    common.add_argument("--cache-dir", help="subspace cache directory (overrides QUADGRAPH_CACHE)")
    common.add_argument("--loop-policy", choices=["include", "exclude", "both"], default=None)
    common.add_argument("--graph", choices=["square", "bar"], default="square",
                        help="dot_k-subspace graph (square) or full graph (bar)")
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "dot", "edgelist"])
    common.add_argument("--output", help="output file")
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--eigen-cap", type=int)
    common.add_argument("--clique-budget", type=int)
    common.add_argument("--max-vertices", type=int, default=MAX_GRAPH_VERTICES)
    common.add_argument("--claims", help="comma-separated claim ids (verify-all)")
    common.add_argument("--suite", action="store_true",
                        help="verify-all over the acceptance instances instead of --n/--k/--q")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadgraph", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _instance_flags()
    for name in GRAPH_COMMANDS:
        subparsers.add_parser(name, parents=[common])
    cache = subparsers.add_parser("cache", help="list or clear the subspace cache")
    cache.add_argument("action", choices=["list", "clear"])
    cache.add_argument("--cache-dir")
    return parser


def run_config(args: argparse.Namespace, n: Optional[int] = None, k: Optional[int] = None,
               q: Optional[int] = None) -> RunConfig:
    """Validated RunConfig from parsed flags; unset flags keep the model defaults."""
    values = {
        "n": n if n is not None else args.n,
        "k": k if k is not None else args.k,
        "q": q if q is not None else args.q,
        "modulus": list(parse_modulus(args.modulus) or []) or None,
        "cache_dir": args.cache_dir,
        "loop_policy": args.loop_policy,
        "output_format": args.output_format,
        "output": args.output,
        "graph": args.graph,
        "seed": args.seed,
        "trials": args.trials,
        "eigen_cap": args.eigen_cap,
        "clique_budget": args.clique_budget,
        "claims": [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None,
    }
    missing = [name for name in ("n", "k", "q") if values[name] is None]
    if missing:
        raise ValidationError(f"missing required flags: {', '.join('--' + m for m in missing)}", field=missing[0])
    try:
        return RunConfig(**{key: value for key, value in values.items() if value is not None})
    except PydanticValidationError as e:
        raise ValidationError(f"invalid parameters: {e.errors()[0]['msg']}", field="run")


def _default_output_format(command: str) -> str:
    return "edgelist" if command == "export" else "json"


def dispatch(args: argparse.Namespace) -> CommandOutput:
    if args.command == "cache":
        return cache_command(args.action, args.cache_dir)
    if args.output_format is None:
        args.output_format = _default_output_format(args.command)
    if args.command == "verify-all" and args.suite:
        from evaluation import ALL_INSTANCES

        runs = [run_config(args, n, k, q) for n, k, q in ALL_INSTANCES]
        return verify_suite(runs, cache=SubspaceCache(args.cache_dir), max_vertices=args.max_vertices)
    usecase = CommandUseCase(run_config(args), max_vertices=args.max_vertices)
    return usecase.execute(args.command)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level or LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        output = dispatch(args)
    except USAGE_ERRORS as e:
        logger.error(f"Usage error: {e.to_dict()}")
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except FrameworkError as e:
        logger.error(f"Command failed: {e.to_dict()}")
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_CLAIM_FAILED
    sys.stdout.write(output.render())
    if output.exit_code != EXIT_OK and output.payload and "claims" in output.payload:
        for entry in output.payload["claims"]:
            if not entry["pass"]:
                print(f"FAILED {entry['claimId']} {entry['instance']}: expected {entry['expected']}, "
                      f"observed {entry['observed']}", file=sys.stderr)
    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
