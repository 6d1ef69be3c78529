"""Command-line entry point.

    cascade analyze|simulate|sweep|boundary|kernel|check-bound
        --config FILE [--seed S] [--reps R] [--n N] [--out PATH]
        [--workers W] [--complete-f]

Exit codes: 0 success, 1 usage/config error, 2 solver error,
3 invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import harness
from .errors import ConfigError, InvariantViolation, SolverError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cascade",
        description="Simulation and analytics for information diffusion over "
                    "coupled social-physical networks.")
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in harness.MODES:
        p = sub.add_parser(mode, help=f"run the {mode} experiment mode")
        p.add_argument("--config", required=True, help="key = value config file")
        p.add_argument("--seed", type=int, default=None, help="master seed override")
        p.add_argument("--reps", type=int, default=None, help="replicate count override")
        p.add_argument("--n", type=int, default=None, help="node count override")
        p.add_argument("--out", default=None, help="CSV output path (default stdout)")
        p.add_argument("--workers", type=int, default=None,
                       help="worker threads for replicates")
        if mode == "check-bound":
            p.add_argument("--complete-f", action="store_true",
                           help="use a complete social layer (worst case)")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return 0 if exc.code in (0, None) else 1
    overrides = {
        "seed": args.seed,
        "reps": args.reps,
        "n": args.n,
        "out": args.out,
        "workers": args.workers,
    }
    if getattr(args, "complete_f", False):
        overrides["bound_complete_f"] = True
    try:
        kv = harness.load_config(args.config)
        cfg = harness.build_config(args.mode, kv, overrides)
        harness.run(cfg)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"cascade: config error: {exc}", file=sys.stderr)
        return 1
    except SolverError as exc:
        print(f"cascade: solver error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"cascade: invariant violation: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
