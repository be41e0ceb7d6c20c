"""Command-line front end.

    padic-frames example twoH --p 3 --n 1
    padic-frames phi f.json --out phi.csv
    padic-frames verify all --seed 7 --trials 20

Exit codes: 0 success, 1 failed check or computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cases import EXAMPLES, UsageError, run_example
from .config import load_settings
from .padic import GroupContext, Section, is_prime
from .spectral import ZeroSystemError, frame_report, spectral_symbol
from .stepfn import StepFunction
from .verify import DEFAULT_PRIMES, SUITES, run_suite


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, allow_nan=False)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"parse error in {path}: {exc}") from None
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_section(path: str | None, ctx: GroupContext) -> Section:
    if path is None or path == "canonical":
        return Section(ctx)
    try:
        return Section.from_json(ctx, _load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"invalid section file {path}: {exc}") from None


def _settings(args):
    return load_settings({"tol_rel": args.tol, "max_level": args.max_level,
                          "matrix_cap": getattr(args, "matrix_cap", None)})


def cmd_example(args) -> int:
    settings = _settings(args)
    level = args.n if args.n is not None else args.m
    if level is None:
        raise UsageError("example needs --n (twoH, twoH2) or --m (cH, cH2)")
    if not is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    ctx = GroupContext(args.p, settings.level_for(args.p))
    section = _load_section(args.section, ctx)
    report, phi = run_example(args.name, args.p, level, section, settings.tol_rel,
                              settings.matrix_cap)
    if args.csv:
        Path(args.csv).write_text(phi.to_csv(), encoding="utf-8")
        report["phi_csv"] = args.csv
    print(_dump(report))
    return 0


def cmd_phi(args) -> int:
    settings = _settings(args)
    raw = _load_json(args.input)
    if isinstance(raw, dict) and isinstance(raw.get("p"), int) and not is_prime(raw["p"]):
        raise UsageError(f"$.p: {raw['p']} is not prime")
    try:
        p = raw["p"] if isinstance(raw, dict) and isinstance(raw.get("p"), int) else 2
        ctx = GroupContext(p, settings.level_for(p))
        f = StepFunction.from_json(raw, ctx)
    except ValueError as exc:
        raise UsageError(f"invalid step function in {args.input}: {exc}") from None
    section = _load_section(args.section, ctx)
    phi = spectral_symbol(f, section)
    report = frame_report(phi, settings.tol_rel).to_json()
    if args.out:
        Path(args.out).write_text(phi.to_csv(), encoding="utf-8")
    else:
        report["phi"] = [float(v) for v in phi.values]
    print(_dump(report))
    return 0


def cmd_verify(args) -> int:
    primes = tuple(args.p) if args.p else DEFAULT_PRIMES
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"--p must be prime, got {p}")
    rows = run_suite(args.suite, primes, args.seed, args.trials)
    failed = 0
    for row in rows:
        print(_dump(row))
        failed += not row["pass"]
    summary = {"suite": args.suite, "checks": len(rows), "failed": failed,
               "max_error": max((r["error"] for r in rows), default=0.0),
               "pass": failed == 0, "seed": args.seed}
    print(_dump(summary))
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-frames",
        description="Frames of translates on Q_p: spectral symbol, frame bounds, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None,
                        help="relative zero-set tolerance (default 1e-9)")
        sp.add_argument("--max-level", type=int, default=None,
                        help="cap on m+k (default: largest with p**L <= 4096)")

    ex = sub.add_parser("example", help="run one of the worked examples")
    ex.add_argument("name", choices=EXAMPLES)
    ex.add_argument("--p", type=int, required=True)
    ex.add_argument("--n", type=int, help="order exponent for twoH/twoH2")
    ex.add_argument("--m", type=int, help="c = p**m for cH/cH2")
    ex.add_argument("--section", help="'canonical' (default) or a JSON offsets file")
    ex.add_argument("--csv", help="write the symbol as CSV to this path")
    ex.add_argument("--matrix-cap", type=int, default=None)
    common(ex)
    ex.set_defaults(func=cmd_example)

    ph = sub.add_parser("phi", help="symbol and frame report of a step function JSON file")
    ph.add_argument("input")
    ph.add_argument("--section")
    ph.add_argument("--out", help="CSV path for the symbol values")
    common(ph)
    ph.set_defaults(func=cmd_phi)

    ve = sub.add_parser("verify", help="randomized identity checks")
    ve.add_argument("suite", choices=SUITES + ("all",))
    ve.add_argument("--p", type=int, action="append",
                    help="prime to test (repeatable; default 2, 3, 5)")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--trials", type=int, default=20)
    ve.set_defaults(func=cmd_verify, tol=None, max_level=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ZeroSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
