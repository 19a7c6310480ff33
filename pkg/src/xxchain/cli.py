"""
Command-line interface.

    xxchain concurrence --n 3 --couplings 1,1,1 --temperature 0
    xxchain sweep --scenario fig4 --j-min 0 --j-max 3 --j-steps 61 --t 0.05 --out fig4.csv
    xxchain optimize --n 3 --impurity-site 2 --pair 1,2 --t 0
    xxchain verify --claims all

Exit codes: 0 success, 1 claim failure, 2 invalid input, 3 I/O error,
4 numerical error.

Every flag may also come from ``--config FILE`` holding ``key = value``
lines (keys spelled like the flags, without the dashes); flags given on the
command line win.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import experiments as ex
from .entanglement import all_pairwise, concurrence, partial_trace_pair
from .errors import ConvergenceError, InputError, InvalidStateError, SweepError
from .model import ChainSpec, impurity_pattern
from .numerics import thermal_state
from .tables import fmt_float, save_sweep, write_sweep

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4


# ------------------------------------------------------------ parsing


def _floats(text: str, field: str) -> list[float]:
    try:
        return [float(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{field}: expected comma-separated numbers, got {text!r}") from None


def _pair(text: str, field: str = "pair") -> tuple[int, int]:
    try:
        i, j = (int(x) for x in str(text).split(","))
    except ValueError:
        raise InputError(f"{field}: expected 'i,j', got {text!r}") from None
    return i, j


def _read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InputError(f"config: line {line_no} is not 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def _apply_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if not getattr(args, "config", None):
        return
    known = {a.dest: a for a in parser._actions}
    for key, raw in _read_config(args.config).items():
        if key not in known or key in ("help", "config", "command"):
            raise InputError(f"config: unknown key {key!r}")
        if getattr(args, key) is not None:
            continue  # command line wins
        action = known[key]
        if action.nargs == 0:
            value = raw.lower() in ("1", "true", "yes", "on")
        else:
            try:
                value = action.type(raw) if action.type else raw
            except ValueError:
                raise InputError(f"config: bad value for {key}: {raw!r}") from None
            if action.nargs == "*" or isinstance(action, argparse._AppendAction):
                value = [value]
        setattr(args, key, value)


def _temperature(value: str, field: str = "temperature") -> float:
    vals = _floats(value, field)
    if len(vals) != 1:
        raise InputError(f"{field}: expected a single value, got {value!r}")
    return vals[0]


def _chain_from_args(args) -> ChainSpec:
    if args.couplings is not None:
        factors = _floats(args.couplings, "couplings")
        if args.n is not None and args.n != len(factors):
            raise InputError(f"couplings: {len(factors)} values given but n={args.n}")
        return ChainSpec(len(factors), tuple(factors))
    if args.n is None:
        raise InputError("n: required unless --couplings is given")
    if args.impurity_site is not None:
        J = 1.0 if args.j is None else args.j
        return impurity_pattern(args.n, args.impurity_site, J)
    return ChainSpec(args.n, (1.0,) * args.n)


def _j_grid(args) -> list[float]:
    if args.j_values is not None:
        return _floats(args.j_values, "j-values")
    if args.j_min is None or args.j_max is None:
        raise InputError("j-min/j-max: required unless --j-values is given")
    steps = 61 if args.j_steps is None else args.j_steps
    if steps < 1:
        raise InputError(f"j-steps: must be >= 1, got {steps}")
    return [float(x) for x in np.linspace(args.j_min, args.j_max, steps)]


def _scenario(args) -> ex.Scenario:
    if args.scenario is not None:
        return ex.named_scenario(args.scenario, n=args.n, impurity_site=args.impurity_site)
    if args.n is None or args.impurity_site is None:
        raise InputError("scenario: give --scenario, or --n with --impurity-site")
    return ex.single_impurity(args.n, args.impurity_site)


# ----------------------------------------------------------- commands


def cmd_concurrence(args, out) -> int:
    spec = _chain_from_args(args)
    T = _temperature(args.temperature if args.temperature is not None else "0")
    ex._check_temperature(T)
    rho = thermal_state(ex.chain_spectrum(spec), T)
    if args.pair:
        results = {p: concurrence(partial_trace_pair(rho, *p)) for p in (_pair(x) for x in args.pair)}
    else:
        results = all_pairwise(rho)
    lines = ["pair_i,pair_j,concurrence,lambda1,lambda2,lambda3,lambda4"]
    for (i, j), res in results.items():
        lines.append(",".join([str(i), str(j), fmt_float(res.value), *map(fmt_float, res.lambdas)]))
    _emit("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    scenario = _scenario(args)
    j_grid = _j_grid(args)
    t_grid = _floats(args.t, "t") if args.t is not None else list(ex.DEFAULT_T_GRID)
    pairs = [_pair(x) for x in args.pair] if args.pair else None
    result = ex.run_sweep(scenario, j_grid, t_grid, pairs)
    if args.out:
        save_sweep(result, args.out)
        print(f"wrote {len(result.rows)} rows to {args.out}", file=out)
    else:
        write_sweep(result, out)
    return EXIT_OK


def cmd_optimize(args, out) -> int:
    scenario = _scenario(args)
    pair = _pair(args.pair[0]) if args.pair else (1, 2)
    if args.t_min is not None or args.t_max is not None:
        if args.t_min is None or args.t_max is None:
            raise InputError("t-min/t-max: give both")
        t_bounds = (args.t_min, args.t_max)
    else:
        t_bounds = _temperature(args.t if args.t is not None else "0", "t")
    j_bounds = (0.0 if args.j_min is None else args.j_min, 5.0 if args.j_max is None else args.j_max)
    steps = 61 if args.j_steps is None else args.j_steps
    opt = ex.maximize_concurrence(scenario, pair, j_bounds, t_bounds, grid_points=steps)
    gJ, gT, gC = opt.grid_best
    lines = [
        f"scenario: {scenario.name} (n={scenario.n})",
        f"pair: {pair[0]},{pair[1]}",
        f"J* = {fmt_float(opt.J)}",
        f"T* = {fmt_float(opt.T)}",
        f"C* = {fmt_float(opt.value)}",
        f"grid best: J={fmt_float(gJ)} T={fmt_float(gT)} C={fmt_float(gC)}",
        f"evaluations: {opt.evaluations}",
    ]
    _emit("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = [x.strip() for x in (args.claims or "all").split(",") if x.strip()]
    parity_n = [args.n] if args.n is not None else None
    reports = ex.run_claims(names, parity_n=parity_n)
    text = "\n".join(r.summary() for r in reports)
    passed = sum(r.passed for r in reports)
    text += f"\n{passed}/{len(reports)} claims passed\n"
    print(text, end="", file=out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
            fh.write("\n")
    return EXIT_OK if passed == len(reports) else EXIT_CLAIM_FAILED


def _emit(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        print(text, end="", file=out)


# --------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xxchain", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key = value file mirroring the flags")
        p.add_argument("--n", type=int)
        p.add_argument("--impurity-site", type=int)
        p.add_argument("--out", help="output file (default: standard output)")

    p = sub.add_parser("concurrence", help="all pairwise concurrences of one chain")
    common(p)
    p.add_argument("--couplings", help="site factors J1,...,Jn")
    p.add_argument("--j", type=float, help="impurity factor (with --impurity-site)")
    p.add_argument("--temperature", help="T >= 0; 0 is the ground multiplet")
    p.add_argument("--pair", action="append", help="i,j (repeatable; default all pairs)")
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("sweep", help="concurrences over a J x T grid, as CSV")
    common(p)
    p.add_argument("--scenario", help="fig1, fig2, fig4, fig5, six-qubit, impurity-site<k>, boundary")
    p.add_argument("--j-min", type=float)
    p.add_argument("--j-max", type=float)
    p.add_argument("--j-steps", type=int)
    p.add_argument("--j-values", help="explicit comma-separated J grid")
    p.add_argument("--t", help="comma-separated temperatures")
    p.add_argument("--pair", action="append", help="i,j (repeatable; default the scenario's)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimize", help="maximise one concurrence over the impurity factor")
    common(p)
    p.add_argument("--scenario")
    p.add_argument("--pair", action="append", help="i,j")
    p.add_argument("--j-min", type=float)
    p.add_argument("--j-max", type=float)
    p.add_argument("--j-steps", type=int)
    p.add_argument("--t", help="fixed temperature (default 0)")
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify", help="check the published claims")
    p.add_argument("--config")
    p.add_argument("--claims", help="all or comma list of: " + ", ".join(ex.CLAIM_SUITES))
    p.add_argument("--n", type=int, help="chain length for the parity suite")
    p.add_argument("--json", help="write the reports as JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        _apply_config(args, sub)
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SweepError, ConvergenceError, InvalidStateError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
