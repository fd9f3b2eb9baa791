#!/usr/bin/env python3
"""
Command-line interface for the Max-TSP solver.
FILE: src/cli/main.py

Subcommands: solve, oracle, gen, verify-gadget, bench.
Exit codes: 0 success, 1 solver error, 2 validation failure,
64 usage error, 65 instance parse error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add core modules to path
src_dir = Path(__file__).parent.parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from core.errors import InstanceFormatError, MaxTSPError, TooLarge
from core.graph_data import format_weight
from core.pipeline import PipelineOptions, bench, default_seed, gadget_trials, run_pipeline
from core.tour import ORACLE_CAP, oracle_opt
from utils.file_utils import format_instance, generate_instance, read_instance, write_instance
from utils.json_utils import dumps, write_json_atomic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


class UsageError(Exception):
    pass


class SolverArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 64"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"❌ {self.prog}: {message}", file=sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = SolverArgumentParser(prog='maxtsp', description="Maximum TSP 7/9-approximation solver")
    parser.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    sub = parser.add_subparsers(dest='command', parser_class=SolverArgumentParser)

    solve = sub.add_parser('solve', help="run the approximation pipeline on an instance file")
    solve.add_argument('file', type=Path)
    solve.add_argument('--report', type=Path, help="write the JSON certificate here")
    solve.add_argument('--oracle', action='store_true', help="compare against the exact optimum")
    solve.add_argument('--oracle-cap', type=int, default=ORACLE_CAP)
    solve.add_argument('--debug-checks', action='store_true', help="assert colorer invariants and the budget")
    solve.add_argument('--seed', type=int, default=None)

    oracle = sub.add_parser('oracle', help="exact maximum tour (small n only)")
    oracle.add_argument('file', type=Path)
    oracle.add_argument('--cap', type=int, default=ORACLE_CAP)

    gen = sub.add_parser('gen', help="generate a random instance")
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('--max-w', type=int, required=True)
    gen.add_argument('--seed', type=int, default=None)
    gen.add_argument('--out', type=Path)

    gadget = sub.add_parser('verify-gadget', help="audit random bad-cycle gadgets")
    gadget.add_argument('--trials', type=int, default=1000)
    gadget.add_argument('--seed', type=int, default=None)

    batch = sub.add_parser('bench', help="run every instance of a directory")
    batch.add_argument('--dir', type=Path, required=True)
    batch.add_argument('--report', type=Path)
    batch.add_argument('--no-oracle', action='store_true')
    return parser


def _seed(value: Optional[int]) -> int:
    return default_seed() if value is None else value


def cmd_solve(args: argparse.Namespace) -> int:
    instance = read_instance(args.file)
    options = PipelineOptions(
        oracle=args.oracle, oracle_cap=args.oracle_cap,
        seed=_seed(args.seed), debug_checks=args.debug_checks,
    )
    tour, certificate = run_pipeline(instance, options)
    print(f"🧭 Tour weight {format_weight(tour.weight)}: {' '.join(map(str, tour.order))}")
    if certificate.opt is not None:
        print(f"📊 opt {format_weight(certificate.opt)}, ratio {format_weight(certificate.ratio or 0)}")
    if certificate.safety_net_events:
        print(f"⚠️ {len(certificate.safety_net_events)} safety-net event(s)")
    if args.report:
        write_json_atomic(args.report, certificate.to_dict())
        print(f"📄 Certificate written to {args.report}")
    if not certificate.passed:
        print(f"❌ Certificate checks failed: {', '.join(certificate.failures())}")
        return EXIT_VALIDATION
    print("✅ Certificate chain holds")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    instance = read_instance(args.file)
    tour = oracle_opt(instance, args.cap)
    print(f"🧭 Optimal tour weight {format_weight(tour.weight)}: {' '.join(map(str, tour.order))}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    seed = _seed(args.seed)
    try:
        instance = generate_instance(args.n, args.max_w, seed)
    except MaxTSPError as e:
        raise UsageError(str(e)) from e
    if args.out:
        write_instance(instance, args.out)
        print(f"📄 Instance n = {instance.n} (seed {seed}) written to {args.out}")
    else:
        sys.stdout.write(format_instance(instance))
    return EXIT_OK


def cmd_verify_gadget(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be positive, got {args.trials}")
    summary = gadget_trials(args.trials, _seed(args.seed))
    if summary['violations']:
        print(f"❌ {summary['violations']} contract violation(s) in {summary['trials']} trials")
        sys.stdout.write(dumps(summary['failures']))
        return EXIT_VALIDATION
    print(f"✅ {summary['trials']} trials, 0 contract violations, max error {summary['max_error']}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    summary = bench(args.dir, PipelineOptions(oracle=not args.no_oracle))
    print(f"📊 {summary['instances']} instance(s), {summary['failed']} failed, "
          f"min ratio {summary['min_ratio']}, {summary['safety_net_events']} safety-net event(s)")
    if args.report:
        write_json_atomic(args.report, summary)
        print(f"📄 Bench report written to {args.report}")
    if summary['failed'] or summary['ratio_violations']:
        return EXIT_VALIDATION
    return EXIT_OK


COMMANDS = {
    'solve': cmd_solve,
    'oracle': cmd_oracle,
    'gen': cmd_gen,
    'verify-gadget': cmd_verify_gadget,
    'bench': cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.error("a subcommand is required")
    except UsageError:
        return EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"❌ Usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceFormatError as e:
        print(f"❌ Parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except MaxTSPError as e:
        logger.error("Solver error: %s", e)
        print(f"❌ Solver error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as e:
        # option validation in PipelineOptions
        print(f"❌ Usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
