"""Command-line front end.

    qhoneyx value   --game quantum
    qhoneyx deceive --game diagonal --delta 20
    qhoneyx sweep   --game quantum --deltas 0,20,40,60,80,100 --format csv
    qhoneyx verify  --game pure --delta 20

``--game`` takes a canned name (pure, diagonal, quantum), ``random:<seed>``
for a random 4x4 game, or a path to a game JSON file.  Files are written
to ``--out`` or, failing that, to ``$QHONEYX_OUTPUT_DIR`` (default: the
working directory).

Exit codes: 0 success, 2 input error, 3 solver non-convergence,
4 certificate failure.
"""

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
import time
from pathlib import Path

from .deception import (
    DeceptionConfig,
    DeceptionInstance,
    result_to_dict,
    solve_deception,
    verify_theorem1,
)
from .equilibrium import NonConvergenceError, SolverConfig, solve_equilibrium
from .hamiltonians import CANNED_GAMES, canned_game, game_to_dict, load_game, random_game

logger = logging.getLogger("qhoneyx")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NONCONVERGENCE = 3
EXIT_CERTIFICATE = 4

OUTPUT_DIR_ENV = "QHONEYX_OUTPUT_DIR"
SWEEP_COLUMNS = ["delta", "realized_payoff", "perceived_value", "residual", "wall_time_s", "winner_restart"]
DEFAULT_DELTAS = "0,20,40,60,80,100"


class InputError(Exception):
    pass


def resolve_game(selector):
    if selector in CANNED_GAMES:
        return canned_game(selector)
    if selector.startswith("random:"):
        try:
            seed = int(selector.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad random game selector {selector!r}") from None
        return random_game(2, 2, rng=seed, label=selector)
    path = Path(selector)
    if not path.exists():
        raise InputError(
            f"game {selector!r} is neither a canned game ({', '.join(CANNED_GAMES)}) nor a file"
        )
    try:
        return load_game(path)
    except (ValueError, json.JSONDecodeError, TypeError) as exc:
        raise InputError(f"invalid game file {selector}: {exc}") from None


def parse_deltas(text):
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad --deltas list {text!r}") from None
    if not vals:
        raise InputError("--deltas is empty")
    if any(not math.isfinite(v) or v < 0 for v in vals):
        raise InputError("budgets must be finite and non-negative")
    return sorted(vals)


def check_delta(v):
    if not math.isfinite(v) or v < 0:
        raise InputError(f"--delta must be finite and non-negative, got {v}")
    return v


def output_path(args, default_name):
    if args.out:
        return None if args.out == "-" else Path(args.out)
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / default_name


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info("wrote %s", path)


def _solver_config(args):
    return SolverConfig(tolerance=args.tol, seed=args.seed)


def _search_config(args):
    return DeceptionConfig(restarts=args.restarts, time_cap_s=args.time_cap_s, seed=args.seed)


def _fmt_matrix(M):
    return [[f"{z.real:+.6f}{z.imag:+.6f}j" for z in row] for row in M]


def cmd_value(args):
    g = resolve_game(args.game)
    cfg = _solver_config(args)
    res = solve_equilibrium(g, cfg)
    lo, hi = res.certificate
    ok = lo >= -res.tolerance and hi <= res.tolerance
    out = {
        "game": g.label,
        "value": res.value,
        "lower": res.lower,
        "upper": res.upper,
        "duality_gap": res.duality_gap,
        "iterations": res.iterations,
        "certificate": {"victim": lo, "deceiver": hi, "tolerance": res.tolerance, "passed": ok},
        "rho_a": {"re": res.rho_a.real.tolist(), "im": res.rho_a.imag.tolist()},
        "rho_b": {"re": res.rho_b.real.tolist(), "im": res.rho_b.imag.tolist()},
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"game        {g.label}")
        print(f"value       {res.value:.6f}")
        print(f"bounds      [{res.lower:.6f}, {res.upper:.6f}]  gap {res.duality_gap:.3e}")
        print(f"iterations  {res.iterations}")
        print(f"certificate {lo:+.3e} (>= -tol)  {hi:+.3e} (<= tol)  tol {res.tolerance:.3e}")
        print("rho_a", _fmt_matrix(res.rho_a))
        print("rho_b", _fmt_matrix(res.rho_b))
    if args.out:
        _write(output_path(args, ""), json.dumps(out, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_CERTIFICATE


def _deceive_once(g, delta, args, initial_points=()):
    inst = DeceptionInstance(g, delta, config=_solver_config(args), search=_search_config(args))
    return solve_deception(inst, initial_points=initial_points)


def cmd_deceive(args):
    g = resolve_game(args.game)
    delta = check_delta(args.delta)
    res = _deceive_once(g, delta, args)
    out = {"game": game_to_dict(g), **result_to_dict(res)}
    name = f"deceive-{g.label or 'game'}-{delta:g}.json"
    path = output_path(args, name)
    _write(path, json.dumps(out, indent=2) + "\n")
    if args.format == "json" and path is not None:
        print(json.dumps(out, indent=2))
    elif path is not None:
        print(f"game             {g.label}")
        print(f"budget           {delta:g}")
        print(f"realized payoff  {res.realized_payoff:.6f}")
        print(f"perceived value  {res.perceived_value:.6f}")
        print(f"max residual     {res.max_residual:.3e} (tol {res.tolerance:.3e})")
        print(f"result           {path}")
    for w in res.warnings:
        logger.warning(w)
    return EXIT_OK if res.feasible else EXIT_CERTIFICATE


def _sweep_rows(g, deltas, args):
    rows, prev, status = [], (), EXIT_OK
    for delta in deltas:
        t0 = time.monotonic()
        try:
            res = _deceive_once(g, delta, args, initial_points=prev)
        except (NonConvergenceError, RuntimeError, ArithmeticError) as exc:
            logger.error("budget %g failed: %s", delta, exc)
            rows.append({"delta": delta, "realized_payoff": "nan", "perceived_value": "nan",
                         "residual": "nan", "wall_time_s": f"{time.monotonic() - t0:.3f}",
                         "winner_restart": "failed"})
            status = EXIT_NONCONVERGENCE
            break
        prev = (res,)
        if not res.feasible:
            status = EXIT_CERTIFICATE
        rows.append({
            "delta": delta,
            "realized_payoff": res.realized_payoff,
            "perceived_value": res.perceived_value,
            "residual": res.max_residual,
            "wall_time_s": round(time.monotonic() - t0, 3),
            "winner_restart": res.winner,
        })
        logger.info("budget %g: realized %.4f perceived %.4f", delta, res.realized_payoff, res.perceived_value)
    return rows, status


def _format_rows(rows, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})
    return buf.getvalue()


def cmd_sweep(args):
    g = resolve_game(args.game)
    deltas = parse_deltas(args.deltas)
    fmt = args.format or "csv"
    rows, status = _sweep_rows(g, deltas, args)
    path = output_path(args, f"sweep-{g.label or 'game'}.{fmt}")
    _write(path, _format_rows(rows, fmt))
    if path is not None:
        print(f"{len(rows)} rows written to {path}")
    return status


def cmd_verify(args):
    g = resolve_game(args.game)
    delta = check_delta(args.delta)
    rep = verify_theorem1(g, delta, _solver_config(args), samples=args.samples, rng=args.seed)
    out = {
        "game": g.label,
        "budget": delta,
        "passed": rep.passed,
        "naive_value": rep.naive_value,
        "robust_value": rep.robust_value,
        "value_gap": rep.naive_value - rep.robust_value,
        "value_gap_error": rep.value_gap_error,
        "rayleigh_max": rep.rayleigh_max,
        "rayleigh_error": rep.rayleigh_error,
        "cross_certificates": rep.cross_certificates,
        "tolerance": rep.tolerance,
        "failures": rep.failures,
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"game          {g.label}")
        print(f"budget        {delta:g}")
        print(f"naive value   {rep.naive_value:.6f}")
        print(f"robust value  {rep.robust_value:.6f}")
        print(f"value gap     {rep.naive_value - rep.robust_value:.6f} (error {rep.value_gap_error:.3e})")
        print(f"rayleigh max  {rep.rayleigh_max:.6f} (error {rep.rayleigh_error:.3e})")
        for k, v in rep.cross_certificates.items():
            print(f"{k:<13} {v:+.3e}")
        print("PASS" if rep.passed else "FAIL")
        for f in rep.failures:
            print(f"  {f}")
    if args.out:
        _write(output_path(args, ""), json.dumps(out, indent=2) + "\n")
    return EXIT_OK if rep.passed else EXIT_CERTIFICATE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--game", required=True, help="canned name, random:<seed>, or game JSON path")
    common.add_argument("--tol", type=float, default=1e-4, help="tolerance relative to ||H||_F")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file ('-' for stdout)")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("-v", "--verbose", action="store_true")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--restarts", type=int, default=16, help="random seeds per budget")
    search.add_argument("--time-cap-s", type=float, default=120.0, help="wall-time cap per budget")

    p = argparse.ArgumentParser(prog="qhoneyx", description="Honey-X deception in quantum games")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("value", parents=[common], help="game value and security policies")
    d = sub.add_parser("deceive", parents=[common, search], help="optimal deception for one budget")
    d.add_argument("--delta", type=float, required=True)
    s = sub.add_parser("sweep", parents=[common, search], help="deception over a list of budgets")
    s.add_argument("--deltas", default=DEFAULT_DELTAS)
    v = sub.add_parser("verify", parents=[common], help="naive vs robust victim equivalence")
    v.add_argument("--delta", type=float, required=True)
    v.add_argument("--samples", type=int, default=100)
    return p


COMMANDS = {"value": cmd_value, "deceive": cmd_deceive, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if not args.tol > 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "restarts", 0) < 0:
        print("error: --restarts must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
