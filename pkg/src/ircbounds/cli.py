"""Command-line interface.

Subcommands
-----------
* ``dm-eval``       - evaluate the seven discrete-memoryless bounds for a
                      channel/input pair given as JSON.
* ``det-capacity``  - evaluate the deterministic-class region for one input,
                      or search a simplex grid of inputs and return the hull.
* ``gauss-region``  - evaluate the 28 closed-form scalar bounds at one
                      operating point.
* ``gauss-sweep``   - sweep power or link rate, optimizing the power split
                      per point; writes delimited output (and, on request,
                      a rendered figure next to it).
* ``verify``        - run the built-in cross-check suites.

Exit codes: 0 success, 1 failed verification, 2 malformed input,
3 violated numeric invariant.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Sequence

import numpy as np

from .det import DetInput, theorem2_region, validate
from .dm import corollary1_region, theorem1_region
from .errors import InvariantError, SchemaError
from .gauss import (
    C_SWAP_MODES,
    baseline_ian,
    baseline_snd,
    gauss_region,
    optimize_sum_rate,
)
from .io import (
    load_channel,
    load_det_input,
    load_det_spec,
    load_gauss_config,
    load_imrc_input,
    load_sweep,
)
from .regions import RateRegion2D, frontier, hull_union, max_weighted
from .verify import SUITES, run_suite

CSV_HEADER = "x,sum_rate_proposed,sum_rate_ian,sum_rate_snd,alpha1_star,alpha2_star,sigma2_star"


def _write_text(path: str, text: str) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        _write_text(out, text)


def _region_payload(region: RateRegion2D) -> dict:
    poly = frontier(region)
    best, argmax = max_weighted(region, 1.0, 1.0)
    return {
        "bounds": [
            {"label": ineq.label, "coeffs": [ineq.a, ineq.b], "rhs": ineq.rhs}
            for ineq in region.inequalities
        ],
        "vertices": [[v[0], v[1]] for v in poly.vertices],
        "sum_rate": best,
        "sum_rate_point": [argmax[0], argmax[1]],
    }


# -- dm-eval ---------------------------------------------------------------------

def _cmd_dm_eval(args: argparse.Namespace) -> int:
    channel = load_channel(args.channel)
    inputs = load_imrc_input(args.input, channel)
    bounds = theorem1_region(channel, inputs)
    payload = _region_payload(RateRegion2D(bounds))
    if channel.relays == 1:
        single = corollary1_region(channel, inputs)
        payload["single_relay_gap"] = max(
            abs(a.rhs - b.rhs) for a, b in zip(bounds, single)
        )
    _emit(payload, args.out)
    return 0


# -- det-capacity ----------------------------------------------------------------

def _simplex_grid(cells: int, steps: int) -> Iterator[tuple[float, ...]]:
    """All pmfs on ``cells`` outcomes with weights that are multiples of 1/steps."""
    for cuts in itertools.combinations(range(steps + cells - 1), cells - 1):
        previous = -1
        counts = []
        for cut in cuts:
            counts.append(cut - previous - 1)
            previous = cut
        counts.append(steps + cells - 2 - previous)
        yield tuple(c / steps for c in counts)


def _cmd_det_capacity(args: argparse.Namespace) -> int:
    spec = load_det_spec(args.spec)
    report = validate(spec)
    if not report.ok:
        raise InvariantError(
            "mapping fails the class conditions: " + "; ".join(report.violations())
        )
    if (args.input is None) == (args.search is None):
        raise SchemaError("det-capacity needs exactly one of --input or --search")
    if args.input is not None:
        inputs = load_det_input(args.input, spec)
        payload = _region_payload(RateRegion2D(theorem2_region(spec, inputs)))
        _emit(payload, args.out)
        return 0
    steps = args.search
    if steps < 1:
        raise SchemaError("--search must be a positive integer")
    polygons = []
    best = (-1.0, None)
    for p1 in _simplex_grid(spec.x1_size, steps):
        for p2 in _simplex_grid(spec.x2_size, steps):
            inputs = DetInput(
                p_q=np.array([1.0]),
                p_x1=np.array([p1]),
                p_x2=np.array([p2]),
            )
            region = RateRegion2D(theorem2_region(spec, inputs))
            polygons.append(frontier(region))
            value, _ = max_weighted(region, 1.0, 1.0)
            if value > best[0]:
                best = (value, (p1, p2))
    hull = hull_union(polygons)
    payload = {
        "vertices": [[v[0], v[1]] for v in hull.vertices],
        "sum_rate": best[0],
        "best_input": {"x1": list(best[1][0]), "x2": list(best[1][1])},
        "inputs_scanned": len(polygons),
    }
    _emit(payload, args.out)
    return 0


# -- gauss-region ----------------------------------------------------------------

def _cmd_gauss_region(args: argparse.Namespace) -> int:
    config, params = load_gauss_config(args.config)
    region = RateRegion2D(gauss_region(config, params, args.c_swap))
    payload = _region_payload(region)
    _emit(payload, args.out)
    if args.plot is not None:
        from .plots import plot_region

        plot_region({"achievable region": frontier(region)}, args.plot)
    return 0


# -- gauss-sweep -----------------------------------------------------------------

def _sweep_rows(args: argparse.Namespace) -> tuple[list[float], list[tuple[float, ...]]]:
    sweep = load_sweep(args.sweep)

    def point(x: float) -> tuple[float, ...]:
        config = sweep.config_at(x)
        params, proposed = optimize_sum_rate(
            config, sweep.alpha_step, sweep.sigma_grid, args.c_swap
        )
        ian = baseline_ian(config, sweep.sigma_grid, args.c_swap)
        snd = baseline_snd(config, sweep.sigma_grid, args.c_swap)
        return (x, proposed, ian, snd, params.alpha1, params.alpha2, params.sigma2)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(point, sweep.grid))
    else:
        rows = [point(x) for x in sweep.grid]
    return list(sweep.grid), rows


def _format_csv(rows: Iterable[tuple[float, ...]], c_swap: str) -> str:
    lines = [f"# c-swap: {c_swap}", CSV_HEADER]
    for x, proposed, ian, snd, a1, a2, s2 in rows:
        lines.append(f"{x:.6g},{proposed:.6f},{ian:.6f},{snd:.6f},{a1:.6g},{a2:.6g},{s2:.6g}")
    return "\n".join(lines) + "\n"


def _cmd_gauss_sweep(args: argparse.Namespace) -> int:
    xs, rows = _sweep_rows(args)
    _write_text(args.out, _format_csv(rows, args.c_swap))
    if args.plot is not None:
        from .plots import plot_sweep

        series = {
            "sum_rate_proposed": [r[1] for r in rows],
            "sum_rate_ian": [r[2] for r in rows],
            "sum_rate_snd": [r[3] for r in rows],
        }
        plot_sweep(xs, series, args.plot)
    return 0


# -- verify ----------------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite)
    for result in results:
        sys.stdout.write(result.line() + "\n")
    failed = sum(not r.passed for r in results)
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ircbounds",
        description="Achievable-rate bounds for two interfering pairs aided by relays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dm = sub.add_parser("dm-eval", help="evaluate the discrete-memoryless bounds")
    dm.add_argument("--channel", required=True, help="channel-law JSON file")
    dm.add_argument("--input", required=True, help="input-distribution JSON file")
    dm.add_argument("--out", help="write JSON here instead of stdout")
    dm.set_defaults(func=_cmd_dm_eval)

    det = sub.add_parser("det-capacity", help="evaluate the deterministic-class region")
    det.add_argument("--spec", required=True, help="deterministic-mapping JSON file")
    det.add_argument("--input", help="input-distribution JSON file")
    det.add_argument("--search", type=int, help="scan simplex grids with this resolution")
    det.add_argument("--out", help="write JSON here instead of stdout")
    det.set_defaults(func=_cmd_det_capacity)

    gr = sub.add_parser("gauss-region", help="evaluate the scalar bounds at one point")
    gr.add_argument("--config", required=True, help="gains/power/split JSON file")
    gr.add_argument("--c-swap", choices=C_SWAP_MODES, default="pattern", dest="c_swap")
    gr.add_argument("--out", help="write JSON here instead of stdout")
    gr.add_argument("--plot", help="also render the frontier to this image file")
    gr.set_defaults(func=_cmd_gauss_region)

    gs = sub.add_parser("gauss-sweep", help="sweep power or link rate; write CSV")
    gs.add_argument("--sweep", required=True, help="sweep-description JSON file")
    gs.add_argument("--out", required=True, help="CSV output path")
    gs.add_argument("--threads", type=int, default=1, help="parallel evaluation threads")
    gs.add_argument("--c-swap", choices=C_SWAP_MODES, default="pattern", dest="c_swap")
    gs.add_argument("--plot", help="also render the curves to this image file")
    gs.set_defaults(func=_cmd_gauss_sweep)

    ver = sub.add_parser("verify", help="run built-in cross-check suites")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InvariantError as exc:
        sys.stderr.write(f"invariant violated: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
