"""Command-line entry point.

Exit codes: 0 pass, 1 inequality violation, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .harness import CHECK_NAMES, DEFAULT_SHAPES, TrialConfig, replay, run_plan
from .module import ModuleElement, ModuleShape, module_norm
from .radius import RadiusConfig, RadiusResult, numerical_radius, omega

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

ENTRY_HELP = (
    "comma-separated row-major complex entries, each 're', 'imi' or 're+imi' "
    "(e.g. '1+2i,0,-i,3.5e-1'); 'j' is accepted in place of 'i'"
)


class UsageError(Exception):
    pass


def _imag_coefficient(text: str) -> float:
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def parse_complex(token: str) -> complex:
    """Parse one 're', 'imi' or 're+imi' token."""
    tok = token.strip().replace(" ", "")
    try:
        if not tok:
            raise ValueError
        if tok[-1] not in "ij":
            return complex(float(tok), 0.0)
        body = tok[:-1]
        split = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                split = k
                break
        if split is None:
            return complex(0.0, _imag_coefficient(body))
        return complex(float(body[:split]), _imag_coefficient(body[split:]))
    except ValueError:
        raise UsageError(f"bad complex entry {token!r}") from None


def parse_entries(text: str, rows: int, cols: int) -> np.ndarray:
    values = [parse_complex(tok) for tok in text.split(",")]
    if len(values) != rows * cols:
        raise UsageError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(values)}")
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


# ---------------------------------------------------------------------------
# JSON with fixed key order and 17 significant digits


def _json_value(v, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        if not math.isfinite(v):
            raise ValueError(f"non-finite float {v!r} cannot be serialized")
        return format(float(v), ".17g")
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{_json_value(str(k), indent, level + 1)}: {_json_value(val, indent, level + 1)}" for k, val in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        if all(not isinstance(e, (dict, list, tuple)) for e in v):
            return "[" + ", ".join(_json_value(e, indent, level + 1) for e in v) + "]"
        return "[\n" + ",\n".join(pad + _json_value(e, indent, level + 1) for e in v) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(obj, indent: int = 2) -> str:
    return _json_value(obj, indent, 0) + "\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modradius",
        description="Numerical radius of Hilbert C*-module elements and a randomized inequality verifier.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def positive_int(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < 1:
            raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
        return value

    def seed_int(text):
        try:
            value = int(text, 0)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if not 0 <= value < 2**64:
            raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
        return value

    def positive_float(text):
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not a number")
        if not (value > 0 and math.isfinite(value)):
            raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
        return value

    def grid_int(text):
        value = positive_int(text)
        if value < 8:
            raise argparse.ArgumentTypeError("grid points must be >= 8")
        return value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-points", type=grid_int, default=1024, help="lambda grid size (default 1024, >= 8)")
    common.add_argument("--out", metavar="PATH", help="write JSON here instead of standard output")

    v = sub.add_parser("verify", parents=[common], help="run the randomized verification suite")
    v.add_argument("--n", type=positive_int, help="algebra size; with --m runs a single shape")
    v.add_argument("--m", type=positive_int, help="module row count; with --n runs a single shape")
    v.add_argument("--trials", type=positive_int, default=200, help="trials per shape (default 200)")
    v.add_argument("--seed", type=seed_int, default=0, help="master seed (default 0)")
    v.add_argument("--tol", type=positive_float, default=1e-8, help="absolute tolerance (default 1e-8)")
    v.add_argument("--check", help="comma-separated subset of: " + ", ".join(CHECK_NAMES))
    v.add_argument("--replay", type=seed_int, metavar="SEED", help="re-run one trial from a witness seed (needs --n, --m)")
    v.add_argument("--workers", type=positive_int, default=1, help="worker processes (default 1)")

    for name, text in (("omega", "Omega(x) for a module element"), ("profile", "lambda profile of Omega(x)")):
        p = sub.add_parser(name, parents=[common], help=text, epilog="entries: " + ENTRY_HELP)
        p.add_argument("--n", type=positive_int, required=True, help="algebra size (columns of x)")
        p.add_argument("--m", type=positive_int, required=True, help="module rows (rows of x)")
        p.add_argument("--entries", required=True, help="the m x n matrix x; " + ENTRY_HELP)

    w = sub.add_parser("wradius", parents=[common], help="numerical radius w(M) of a square matrix", epilog="entries: " + ENTRY_HELP)
    w.add_argument("--n", type=positive_int, required=True, help="matrix size")
    w.add_argument("--entries", required=True, help="the n x n matrix M; " + ENTRY_HELP)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if (args.n is None) != (args.m is None):
            parser.error("--n and --m must be given together")
        if args.replay is not None and args.n is None:
            parser.error("--replay needs --n and --m")
        if args.check:
            names = [c.strip() for c in args.check.split(",") if c.strip()]
            unknown = [c for c in names if c not in CHECK_NAMES]
            if unknown or not names:
                parser.error(f"unknown check name(s): {', '.join(unknown) or '(empty)'}")
            args.check = names
        else:
            args.check = None
    else:
        rows = args.m if args.command != "wradius" else args.n
        try:
            args.matrix = parse_entries(args.entries, rows, args.n)
        except UsageError as exc:
            parser.error(str(exc))
    return args


def _radius_json(res: RadiusResult, **extra) -> dict:
    out = {"value": res.value, "argmax_theta": res.argmax_theta, "certificate": res.certificate}
    out.update(extra)
    return out


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def run(args: argparse.Namespace) -> int:
    radius_cfg = RadiusConfig(grid_points=args.grid_points)
    if args.command == "verify":
        shape = ModuleShape(args.n, args.m) if args.n is not None else ModuleShape(1, 1)
        cfg = TrialConfig(shape=shape, trials=args.trials, master_seed=args.seed, radius_cfg=radius_cfg, tol=args.tol)
        if args.replay is not None:
            report = replay(args.replay, cfg, args.check)
        else:
            shapes = (shape,) if args.n is not None else DEFAULT_SHAPES
            report = run_plan(cfg, shapes, args.check, workers=args.workers)
        _emit(dumps(report.to_dict()), args.out)
        return EXIT_OK if report.passed else EXIT_VIOLATION

    if args.command == "wradius":
        res = numerical_radius(args.matrix, radius_cfg)
        _emit(dumps(_radius_json(res)), args.out)
        return EXIT_OK

    x = ModuleElement(ModuleShape(args.n, args.m), args.matrix)
    if args.command == "omega":
        res = omega(x, radius_cfg)
        _emit(dumps(_radius_json(res, module_norm=module_norm(x))), args.out)
        return EXIT_OK

    res = omega(x, radius_cfg, keep_profile=True)
    values = [f for _, f in res.profile_samples]
    payload = {
        "value": res.value,
        "certificate": res.certificate,
        "min": min(values),
        "max": max(values),
        "samples": [[t, f] for t, f in res.profile_samples],
    }
    _emit(dumps(payload), args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    try:
        return run(args)
    except OSError as exc:
        print(f"modradius: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"modradius: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
