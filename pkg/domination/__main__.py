"""Entry point: parse the command line, run one command, exit with its code."""

import argparse
import asyncio
import sys

from pydantic import ValidationError

from domination.config import log
from domination.dominate import DominationKind
from domination.graph import Family
from domination.handlers import EXIT_USAGE, run
from domination.options import OutputFormat, RandomFamily, Restriction, RunConfig, Transform


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source")
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--family", choices=[f.value for f in Family])
    src.add_argument("--random", choices=[r.value for r in RandomFamily], help="seeded random graph of order --n")
    src.add_argument("--n", type=int)
    src.add_argument("--m", type=int, default=0)
    src.add_argument("--p", type=float, help="edge probability for --random connected")
    p.add_argument("--transform", choices=[t.value for t in Transform], default=Transform.NONE.value)
    p.add_argument("--second", help="second edge-list file for --transform join")


def _add_budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--time-budget", type=float, help="seconds per solve (default: DOMINATION_TIME_BUDGET)")
    p.add_argument("--node-budget", type=int)
    p.add_argument("--timings", action="store_true", help="include wall-clock millis in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m domination",
        description="Exact domination parameters and checks of paired disjunctive domination results",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = [f.value for f in OutputFormat]

    gen = sub.add_parser("gen", help="generate a graph as an edge list")
    _add_source(gen)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.add_argument("--out")

    compute = sub.add_parser("compute", help="compute one domination parameter exactly")
    _add_source(compute)
    compute.add_argument("--seed", type=int)
    compute.add_argument("--kind", choices=[k.value for k in DominationKind], default=DominationKind.PAIRED_DISJUNCTIVE.value)
    compute.add_argument(
        "--restrict",
        choices=[r.value for r in Restriction],
        help="restrict members of a middle graph; an infeasible restriction reports status infeasible and exits 0",
    )
    compute.add_argument("--format", choices=formats, default="text")
    compute.add_argument("--out")
    _add_budgets(compute)

    verify = sub.add_parser("verify", help="check closed forms, constructions and bounds against the solver")
    verify.add_argument("--suite", default="all", help="'all', a statement id, or its prefix such as T45")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--format", choices=formats, default="csv")
    verify.add_argument("--out")
    verify.add_argument("--allow-skipped", action="store_true", help="exit 0 when rows were skipped on budget")
    _add_budgets(verify)

    sweep = sub.add_parser("sweep", help="all parameters of M(G) over seeded random trees and graphs")
    sweep.add_argument("--trees", type=int, default=0)
    sweep.add_argument("--graphs", type=int, default=0)
    sweep.add_argument("--n-min", type=int)
    sweep.add_argument("--n-max", type=int)
    sweep.add_argument("--p", type=float)
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.add_argument("--out")
    sweep.add_argument("--allow-skipped", action="store_true")
    _add_budgets(sweep)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Unset flags fall back to RunConfig defaults."""
    return RunConfig(**{k: v for k, v in vars(args).items() if v is not None})


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValidationError as e:
        for err in e.errors():
            loc = ".".join(str(x) for x in err["loc"]) or "arguments"
            log.error("invalid %s: %s", loc, err["msg"])
        return EXIT_USAGE
    return asyncio.run(run(config))


if __name__ == "__main__":
    sys.exit(main())
