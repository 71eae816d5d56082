"""Command handlers: gen, compute, verify, sweep. Each returns a process exit code."""

import asyncio
import json
import random
import sys
from pathlib import Path

import aiofiles

from domination.config import log
from domination.errors import IsolatedVertexError
from domination.graph import Graph, generate, parse_edge_list, random_connected_graph, random_tree, serialize_edge_list
from domination.options import Command, OutputFormat, RandomFamily, Restriction, RunConfig, Transform
from domination.reports import render_reports, render_result, render_sweep, summary_line
from domination.solve import SolveStatus, minimum, minimum_restricted
from domination.state import executor
from domination.theorems import SweepRow, TheoremReport, Verdict, VerifyRange, suite_ids, sweep_instance, verify_theorem
from domination.transform import MiddleGraph, join, line_graph, middle_graph, original_vertices, subdivision_vertices

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


async def read_graph(path: Path) -> Graph:
    async with aiofiles.open(path) as f:
        return parse_edge_list(await f.read())


async def emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(out, "w") as f:
        await f.write(text)
    log.info("Wrote %s", out)


async def load_source(config: RunConfig) -> tuple[str, Graph]:
    if config.input is not None:
        return str(config.input), await read_graph(config.input)
    if config.random is RandomFamily.TREE:
        return f"random_tree(n={config.n},seed={config.seed})", random_tree(config.n, config.seed)
    if config.random is RandomFamily.CONNECTED:
        name = f"random_connected(n={config.n},p={config.p},seed={config.seed})"
        return name, random_connected_graph(config.n, config.p, config.seed)
    spec = config.family_spec()
    return spec.describe(), generate(spec)


async def load_transformed(config: RunConfig) -> tuple[str, Graph, MiddleGraph | None]:
    name, g = await load_source(config)
    match config.transform:
        case Transform.MIDDLE:
            mg = middle_graph(g)
            return f"M({name})", mg.g, mg
        case Transform.LINE:
            return f"L({name})", line_graph(g), None
        case Transform.JOIN:
            h = await read_graph(config.second)
            return f"{name}+{config.second}", join(g, h), None
    return name, g, None


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

async def cmd_gen(config: RunConfig) -> int:
    try:
        name, g, mg = await load_transformed(config)
        if config.format is OutputFormat.JSON:
            data = mg.to_json() if mg is not None else {"n": g.n, "m": g.m, "edges": [[u, v] for u, v in g.edges()]}
            text = json.dumps(data) + "\n"
        else:
            text = serialize_edge_list(g) + "\n"
        await emit(text, config.out)
    except (ValueError, OSError) as e:
        log.error("gen failed: %s", e)
        return EXIT_USAGE
    except Exception:
        log.exception("gen failed")
        return EXIT_USAGE

    summary = f"{name}: n={g.n} m={g.m}"
    if config.out is not None:
        print(summary)
    else:
        log.info(summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

async def cmd_compute(config: RunConfig) -> int:
    loop = asyncio.get_running_loop()
    try:
        name, g, mg = await load_transformed(config)
        options = config.solve_options()
        log.info("Computing %s of %s (n=%d, m=%d)", config.kind.symbol, name, g.n, g.m)
        if config.restrict is not None:
            allowed = subdivision_vertices(mg) if config.restrict is Restriction.SUBDIVISION else original_vertices(mg)
            result = await loop.run_in_executor(executor, minimum_restricted, g, config.kind, allowed, options)
        else:
            result = await loop.run_in_executor(executor, minimum, g, config.kind, options)
        await emit(render_result(g, result, config.format.value, config.timings), config.out)
    except IsolatedVertexError as e:
        log.error("compute refused %s", e)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        log.error("compute failed: %s", e)
        return EXIT_USAGE
    except Exception:
        log.exception("compute failed")
        return EXIT_USAGE

    if result.status is SolveStatus.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _campaign_exit(failed: bool, skipped: bool, allow_skipped: bool) -> int:
    if failed:
        return EXIT_MISMATCH
    if skipped and not allow_skipped:
        return EXIT_BUDGET
    return EXIT_OK


async def cmd_verify(config: RunConfig) -> int:
    loop = asyncio.get_running_loop()
    try:
        ids = suite_ids(config.suite)
        rng = VerifyRange(
            max_n=config.max_n, samples=config.samples, seed=config.seed, options=config.solve_options(),
        )
        log.info("Verification campaign: %d statement(s), max_n=%d, samples=%d", len(ids), rng.max_n, rng.samples)
        batches = await asyncio.gather(*(loop.run_in_executor(executor, verify_theorem, t, rng) for t in ids))
        reports: list[TheoremReport] = [r for batch in batches for r in batch]
        await emit(render_reports(reports, config.format.value, config.timings), config.out)
    except (ValueError, OSError) as e:
        log.error("verify failed: %s", e)
        return EXIT_USAGE
    except Exception:
        log.exception("verify failed")
        return EXIT_USAGE

    log.info(summary_line(reports))
    return _campaign_exit(
        any(r.verdict is Verdict.MISMATCH for r in reports),
        any(r.verdict is Verdict.SKIPPED for r in reports),
        config.allow_skipped,
    )


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def sweep_instances(config: RunConfig) -> list[tuple[str, Graph]]:
    """Seeded trees first, then connected graphs; instance names carry their generator arguments."""
    instances = []
    for i in range(config.trees):
        seed = config.seed * 1000 + i
        n = random.Random(seed).randint(config.n_min, config.n_max)
        instances.append((f"random_tree(n={n},seed={seed})", random_tree(n, seed)))
    for i in range(config.graphs):
        seed = config.seed * 1000 + config.trees + i
        n = random.Random(seed).randint(config.n_min, config.n_max)
        name = f"random_connected(n={n},p={config.p},seed={seed})"
        instances.append((name, random_connected_graph(n, config.p, seed)))
    return instances


async def cmd_sweep(config: RunConfig) -> int:
    loop = asyncio.get_running_loop()
    try:
        options = config.solve_options()
        instances = sweep_instances(config)
        log.info("Sweeping %d instance(s)", len(instances))
        rows: list[SweepRow] = await asyncio.gather(
            *(loop.run_in_executor(executor, sweep_instance, name, g, options) for name, g in instances)
        )
        fmt = config.format.value if config.format is OutputFormat.JSON else "csv"
        await emit(render_sweep(rows, fmt), config.out)
    except (ValueError, OSError) as e:
        log.error("sweep failed: %s", e)
        return EXIT_USAGE
    except Exception:
        log.exception("sweep failed")
        return EXIT_USAGE

    violated = [r.instance for r in rows if r.violated]
    if violated:
        log.warning("Chain or bound violated on %d instance(s): %s", len(violated), ", ".join(violated))
    return _campaign_exit(
        bool(violated),
        any(v is Verdict.SKIPPED for r in rows for v in r.chains.values()),
        config.allow_skipped,
    )


HANDLERS = {
    Command.GEN: cmd_gen,
    Command.COMPUTE: cmd_compute,
    Command.VERIFY: cmd_verify,
    Command.SWEEP: cmd_sweep,
}


async def run(config: RunConfig) -> int:
    return await HANDLERS[config.command](config)
