"""Command-line entry point: ``korobov <subcommand> [options]``.

Single results are written as JSON, grids as CSV.  Every output starts
with the full run configuration (JSON ``config`` field, or ``# key=value``
comment lines in CSV) so a run can be repeated from its own output.

Exit codes: 0 success, 2 invalid input, 3 resource limit exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

from . import __version__
from .approximator import FourierPoly, approximate, l2_error
from .complexity import DEFAULT_NODE_BUDGET, info_complexity
from .exceptions import KorobovError, ResourceLimit, ValidationError
from .params import KorobovParams, load_config
from .spectrum import DEFAULT_FRONTIER_CAP, enumerate_top, worst_case_error
from .tractability import classify, curse_witness, fit_exponent
from .zeta import riemann_zeta

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE = 0, 2, 3


def fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _jsonable(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from exc


def _int_list(text: str) -> List[int]:
    """``1,2,5`` or an inclusive range ``1..7``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers like 1,2,3 or 1..7, got {text!r}") from exc


def _shared(parser: argparse.ArgumentParser, default_format: str | None = None):
    parser.add_argument("--gamma", default="const:1", help="weights: const:c | poly:a | geom:q | list:g1,g2,...")
    parser.add_argument("--alpha", default="const:1", help="smoothness: const:a | logaffine:a,b | list:a1,a2,...")
    parser.add_argument("--config", help="key=value file with gamma= and alpha= lines (overrides flags)")
    parser.add_argument("--format", choices=("csv", "json"), default=default_format)
    parser.add_argument("--out", help="write to this path instead of stdout")
    parser.add_argument("--threads", type=int, default=1, help="worker threads; never changes results")
    parser.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    parser.add_argument("--frontier-cap", type=int, default=DEFAULT_FRONTIER_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="korobov",
        description="Spectrum, information complexity and tractability of L2 approximation "
        "on weighted Korobov spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="largest eigenvalues with their frequencies")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _shared(p, "csv")

    p = sub.add_parser("complexity", help="exact information complexity n(eps, d)")
    p.add_argument("--d", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--d-grid", type=_int_list)
    p.add_argument("--eps-grid", type=_float_list)
    p.add_argument("--tau", type=float, help="also report the bound 2 eps^(-2 tau) prod(...)")
    _shared(p)

    p = sub.add_parser("classify", help="tractability report")
    _shared(p, "json")

    p = sub.add_parser("fit", help="empirical exponent of n(eps, d) in 1/eps")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--eps-grid", type=_float_list, required=True)
    _shared(p, "json")

    p = sub.add_parser("curse", help="exact counts against 3^d")
    p.add_argument("--d-grid", type=_int_list, required=True)
    p.add_argument("--eps", type=float, required=True)
    _shared(p, "csv")

    p = sub.add_parser("approx", help="apply the optimal n-term algorithm to a coefficient file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True, help='JSON map "k1,...,kd" -> [re, im]')
    _shared(p, "json")

    p = sub.add_parser("zeta", help="Riemann zeta for real s > 1")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    return parser


def _run_config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if v is not None}
    return _jsonable(cfg)


def _params(args) -> KorobovParams:
    if getattr(args, "config", None):
        params = load_config(args.config)
        args.gamma, args.alpha = str(params.weights), str(params.smoothness)
        return params
    return KorobovParams.from_strings(args.gamma, args.alpha)


def _emit_json(config: dict, result, stream):
    json.dump({"config": config, "result": _jsonable(result)}, stream, indent=2)
    stream.write("\n")


def _emit_csv(config: dict, header: Sequence[str], rows, stream):
    for key, value in config.items():
        stream.write(f"# {key}={json.dumps(value) if isinstance(value, (list, dict)) else fmt(value)}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])


def _map(args, fn, items):
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_spectrum(args, params, config, out):
    entries = enumerate_top(params, args.d, args.n, args.frontier_cap)
    if args.format == "json":
        rows = [
            {"rank": i, "k": list(e.index), "lambda": e.value, "sqrt_lambda": e.sqrt_value}
            for i, e in enumerate(entries, start=1)
        ]
        _emit_json(config, rows, out)
    else:
        header = ["rank", *[f"k{j}" for j in range(1, args.d + 1)], "lambda", "sqrt_lambda"]
        rows = ([i, *e.index, e.value, e.sqrt_value] for i, e in enumerate(entries, start=1))
        _emit_csv(config, header, rows, out)


def cmd_complexity(args, params, config, out):
    grid = args.d_grid is not None or args.eps_grid is not None
    d_values = args.d_grid if args.d_grid is not None else [args.d]
    eps_values = args.eps_grid if args.eps_grid is not None else [args.eps]
    if None in d_values or None in eps_values:
        raise ValidationError("complexity needs --d/--d-grid and --eps/--eps-grid")
    queries = [(e, d) for e in eps_values for d in d_values]
    results = _map(
        args,
        lambda q: info_complexity(params, q[1], q[0], tau=args.tau, node_budget=args.node_budget),
        queries,
    )
    fmt_choice = args.format or ("csv" if grid else "json")
    if fmt_choice == "json":
        payload = [r.to_dict() for r in results]
        _emit_json(config, payload if grid else payload[0], out)
    else:
        header = ["epsilon", "d", "count", "upper_bound", "nodes_visited"]
        rows = (
            [r.epsilon, r.d, r.count, "" if r.upper_bound is None else r.upper_bound, r.nodes_visited]
            for r in results
        )
        _emit_csv(config, header, rows, out)


def cmd_classify(args, params, config, out):
    report = classify(params).to_dict()
    if args.format == "csv":
        _emit_csv(config, list(report), [list(report.values())], out)
    else:
        _emit_json(config, report, out)


def cmd_fit(args, params, config, out):
    def counter(eps):
        return _map(
            args, lambda e: info_complexity(params, args.d, e, node_budget=args.node_budget).count, eps
        )

    result = fit_exponent(params, args.d, args.eps_grid, counter=counter).to_dict()
    if args.format == "csv":
        rows = ([e, c] for e, c in zip(result["epsilons"], result["counts"]))
        config = {**config, "slope": result["slope"], "intercept": result["intercept"]}
        _emit_csv(config, ["epsilon", "count"], rows, out)
    else:
        _emit_json(config, result, out)


def cmd_curse(args, params, config, out):
    def row(d):
        count = info_complexity(params, d, args.eps, node_budget=args.node_budget).count
        bound, holds = curse_witness(params, args.eps, d, verify=False)
        return [d, 3**d, count, holds and count >= bound]

    rows = _map(args, row, args.d_grid)
    if args.format == "json":
        _emit_json(config, [dict(zip(("d", "three_pow_d", "count", "witness_holds"), r)) for r in rows], out)
    else:
        _emit_csv(config, ["d", "three_pow_d", "count", "witness_holds"], rows, out)


def cmd_approx(args, params, config, out):
    f = FourierPoly.load(args.input, args.d)
    g = approximate(f, params, args.n, args.frontier_cap)
    result = {
        "coefficients": g.to_json_dict(),
        "error": l2_error(f, g),
        "bound": worst_case_error(params, args.d, args.n, args.frontier_cap),
    }
    if args.format == "csv":
        header = [*[f"k{j}" for j in range(1, args.d + 1)], "re", "im"]
        rows = ([*k, c.real, c.imag] for k, c in g.terms.items())
        config = {**config, "error": result["error"], "bound": result["bound"]}
        _emit_csv(config, header, rows, out)
    else:
        _emit_json(config, result, out)


def cmd_zeta(args, params, config, out):
    z = riemann_zeta(args.s)
    if args.format == "csv":
        _emit_csv(config, ["s", "value", "abs_error_bound"], [[z.s, z.value, z.abs_error_bound]], out)
    else:
        _emit_json(config, {"s": z.s, "value": z.value, "abs_error_bound": z.abs_error_bound}, out)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "complexity": cmd_complexity,
    "classify": cmd_classify,
    "fit": cmd_fit,
    "curse": cmd_curse,
    "approx": cmd_approx,
    "zeta": cmd_zeta,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buffer = io.StringIO()
    try:
        if getattr(args, "threads", 1) < 1:
            raise ValidationError("--threads must be >= 1")
        params = _params(args) if args.command != "zeta" else None
        config = _run_config(args)
        COMMANDS[args.command](args, params, config, buffer)
    except ResourceLimit as exc:
        print(f"korobov: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"korobov: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except KorobovError as exc:
        print(f"korobov: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
