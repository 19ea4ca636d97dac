"""Command-line interface.

Subcommands:
    seed      extract seed label maps only
    grow      seeds plus region growing
    eval      score existing predictions against manifest ground truth
    pipeline  full run: seed, grow, write outputs, evaluate

Exit codes: 0 success, 1 fatal I/O or format error, 2 evaluation impossible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import EmptyEvaluation, SeedGrowError
from .manifest import load_manifest
from .pipeline import evaluate_predictions, run_pipeline
from .types import GrowConfig


def _add_config_flags(parser: argparse.ArgumentParser, *, growing: bool) -> None:
    defaults = GrowConfig()
    parser.add_argument("--seed-fraction", type=float, default=defaults.seed_fraction,
                        help="fraction of pixels seeded per class (default %(default)s)")
    parser.add_argument("--bg-thresh", type=float, default=defaults.bg_saliency_threshold,
                        help="saliency below this seeds background (default %(default)s)")
    parser.add_argument("--num-classes", type=int, default=defaults.num_classes,
                        help="number of object classes (default %(default)s)")
    if growing:
        parser.add_argument("--theta", type=float, default=defaults.theta,
                            help="growing similarity threshold (default %(default)s)")
        parser.add_argument("--connectivity", type=int, choices=(4, 8),
                            default=defaults.connectivity,
                            help="pixel neighborhood (default %(default)s)")


def _config_from_args(args: argparse.Namespace) -> GrowConfig:
    return GrowConfig(
        theta=getattr(args, "theta", GrowConfig.theta),
        connectivity=getattr(args, "connectivity", GrowConfig.connectivity),
        seed_fraction=args.seed_fraction,
        bg_saliency_threshold=args.bg_thresh,
        num_classes=args.num_classes,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seedgrow",
        description="Weak image labels to dense pixel pseudo-labels: "
        "CAM seeds, saliency-guided region growing, IoU evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seed = sub.add_parser("seed", help="emit seed label maps only")
    p_seed.add_argument("--manifest", required=True, type=Path)
    p_seed.add_argument("--out", required=True, type=Path)
    _add_config_flags(p_seed, growing=False)

    p_grow = sub.add_parser("grow", help="seeds plus region growing")
    p_grow.add_argument("--manifest", required=True, type=Path)
    p_grow.add_argument("--out", required=True, type=Path)
    _add_config_flags(p_grow, growing=True)

    p_eval = sub.add_parser("eval", help="evaluate existing predictions")
    p_eval.add_argument("--pred-dir", required=True, type=Path)
    p_eval.add_argument("--manifest", required=True, type=Path)
    p_eval.add_argument("--report", type=Path, help="also write the report to this file")
    p_eval.add_argument("--flat", action="store_true",
                        help="emit the report as key=value lines")
    p_eval.add_argument("--num-classes", type=int, default=GrowConfig.num_classes)

    p_pipe = sub.add_parser("pipeline", help="full run: seed, grow, evaluate")
    p_pipe.add_argument("--manifest", required=True, type=Path)
    p_pipe.add_argument("--out", required=True, type=Path)
    _add_config_flags(p_pipe, growing=True)
    p_pipe.add_argument("--strict", action="store_true",
                        help="abort on the first per-entry failure")
    p_pipe.add_argument("--jobs", type=int, default=1,
                        help="worker threads for independent entries")
    p_pipe.add_argument("--report", type=Path, help="also write the report to this file")
    p_pipe.add_argument("--flat", action="store_true",
                        help="write the report file as key=value lines")

    return parser


def _write_report(summary, args: argparse.Namespace) -> None:
    report_path = getattr(args, "report", None)
    if report_path is None:
        return
    text = summary.report(flat=args.flat)
    if text is not None:
        Path(report_path).write_text(text + "\n", encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        entries = load_manifest(args.manifest)
        if args.command == "seed":
            summary = run_pipeline(entries, _config_from_args(args), args.out,
                                   do_grow=False, do_eval=False)
        elif args.command == "grow":
            summary = run_pipeline(entries, _config_from_args(args), args.out,
                                   do_eval=False)
        elif args.command == "eval":
            cfg = GrowConfig(num_classes=args.num_classes)
            summary = evaluate_predictions(entries, args.pred_dir, cfg)
        else:
            summary = run_pipeline(entries, _config_from_args(args), args.out,
                                   strict=args.strict, jobs=args.jobs)
        print(summary.render())
        _write_report(summary, args)
    except EmptyEvaluation as exc:
        print(f"seedgrow: evaluation impossible: {exc}", file=sys.stderr)
        return 2
    except (SeedGrowError, OSError) as exc:
        print(f"seedgrow: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
