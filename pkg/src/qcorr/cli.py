"""Command line front end.

    qcorr sweep --config run.cfg [--out stem] [--svg] [--threads N]
    qcorr figure fig1a [--out stem] [--svg] [--threads N]

Exit codes: 0 success, 1 config/preset validation problems, 2 I/O errors.
--threads 0 means one worker per CPU; the QCORR_THREADS environment
variable is used when the flag is absent.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from .model import NonPositiveTemperature
from .svg import emit_svg
from .sweep import (
    PRESET_NAMES,
    ParseError,
    UnknownPreset,
    ValidationError,
    emit_csv,
    figure_preset,
    parse_config,
    run_sweep,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcorr",
        description="Thermal two-qubit correlation and work-extraction sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file stem (overrides the config)")
    common.add_argument(
        "--svg", action="store_true", help="also write an SVG chart"
    )
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads; 0 = one per CPU (default: QCORR_THREADS or 1)",
    )

    p_sweep = sub.add_parser("sweep", parents=[common], help="run a config-driven sweep")
    p_sweep.add_argument("--config", required=True, help="sweep config file")

    p_fig = sub.add_parser(
        "figure", parents=[common], help="run a figure-reproduction preset"
    )
    p_fig.add_argument("preset", help=f"one of: {', '.join(PRESET_NAMES)}")
    return parser


def _resolve_threads(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("QCORR_THREADS", "").strip()
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"QCORR_THREADS must be an integer, got {env!r}") from None
    return 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        threads = _resolve_threads(args.threads)
        if args.command == "sweep":
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
        else:
            cfg = figure_preset(args.preset)
        if args.out:
            cfg = replace(cfg, output=args.out)
        if args.svg:
            cfg = replace(cfg, emit_svg=True)

        result = run_sweep(cfg, threads=threads)
        csv_path = cfg.output + ".csv"
        emit_csv(result, csv_path)
        written = [csv_path]
        if cfg.emit_svg:
            svg_path = cfg.output + ".svg"
            emit_svg(result, svg_path)
            written.append(svg_path)
    except (ParseError, ValidationError, UnknownPreset, NonPositiveTemperature) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {', '.join(written)} ({len(result.rows)} rows)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
