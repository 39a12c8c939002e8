"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import curves
from .document import (
    demo_document,
    document_to_json,
    load_document,
    save_document,
)
from .errors import ParseError, T2SplineError
from .output import Scene, render_svg, write_csv
from .pipeline import pipeline_point

SERIES_CHOICES = ("band", "reduced", "defuzzified", "crisp", "all")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="t2spline",
        description="Model normal type-2 fuzzy data points as rational B-spline curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("demo", help="emit the built-in demonstration model document")
    p.add_argument("--out", default="-", help="output file (default: stdout)")

    p = sub.add_parser("validate", help="check a model document; exit 1 on violation")
    p.add_argument("file")

    p = sub.add_parser("pipeline", help="per-point crisp solutions (JSON or CSV)")
    p.add_argument("file")
    p.add_argument("--alpha", type=float, default=None, help="override the document cut level")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default="-", help="output file (default: stdout)")

    for name, blurb in (
        ("curve", "sample curves to CSV"),
        ("plot", "render curves to SVG"),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("file")
        p.add_argument(
            "--series",
            default="all",
            help="comma-separated subset of band,reduced,defuzzified,crisp (default: all)",
        )
        p.add_argument("--alpha", type=float, default=None, help="override the document cut level")
        p.add_argument("--order", type=int, default=None, help="override the curve order")
        p.add_argument("--samples", type=int, default=None, help="override the sample count")
        p.add_argument("--out", default="-", help="output file (default: stdout)")
    return parser


def _parse_series(spec: str) -> set[str]:
    names = {s.strip() for s in spec.split(",") if s.strip()}
    bad = names - set(SERIES_CHOICES)
    if bad:
        raise T2SplineError(f"unknown series {sorted(bad)}; choose from {', '.join(SERIES_CHOICES)}")
    if not names or "all" in names:
        return {"band", "reduced", "defuzzified", "crisp"}
    return names


def _load(args) -> tuple:
    doc = load_document(args.file)
    if getattr(args, "alpha", None) is not None:
        doc.alpha = args.alpha
    if getattr(args, "order", None) is not None:
        doc.order = args.order
    if getattr(args, "samples", None) is not None:
        doc.samples = args.samples
    return doc, doc.to_model()


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _cmd_demo(args) -> int:
    doc = demo_document()
    if args.out == "-":
        sys.stdout.write(document_to_json(doc))
    else:
        save_document(doc, args.out)
    return 0


def _cmd_validate(args) -> int:
    load_document(args.file)
    print(f"{args.file}: ok")
    return 0


def _cmd_pipeline(args) -> int:
    doc, model = _load(args)
    solutions = [pipeline_point(p, model.alpha) for p in model.fuzzy_controls]
    out, close = _open_out(args.out)
    try:
        if args.format == "json":
            payload = {
                "alpha": model.alpha,
                "points": [{"x": x, "y": y} for x, y in solutions],
            }
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write("index,x,y\n")
            for i, (x, y) in enumerate(solutions):
                out.write(f"{i},{x:.16e},{y:.16e}\n")
    finally:
        if close:
            out.close()
    return 0


def _series_pairs(model, names: set[str], samples: int) -> list:
    pairs = []
    seen = set()

    def add(name, line):
        if name not in seen:
            seen.add(name)
            pairs.append((name, line))

    if "band" in names:
        for name, line in curves.fuzzy_curve_band(model, samples).items():
            add(name, line)
    if "reduced" in names:
        red = curves.reduced_curves(model, samples)
        add("tr_left", red.left)
        add("crisp", red.crisp)
        add("tr_right", red.right)
    if "crisp" in names:
        add("crisp", curves.sample_curve(model.crisp_model(), samples))
    if "defuzzified" in names:
        add("defuzzified", curves.defuzzified_curve(model, samples))
    return pairs


def _cmd_curve(args) -> int:
    doc, model = _load(args)
    names = _parse_series(args.series)
    pairs = _series_pairs(model, names, doc.samples)
    out, close = _open_out(args.out)
    try:
        write_csv(pairs, out)
    finally:
        if close:
            out.close()
    return 0


def _cmd_plot(args) -> int:
    doc, model = _load(args)
    names = _parse_series(args.series)
    scene = Scene(controls=np.array([p.crisp_xy for p in model.fuzzy_controls]))
    if "band" in names:
        scene.band = curves.fuzzy_curve_band(model, doc.samples)
    if "reduced" in names:
        scene.reduced = curves.reduced_curves(model, doc.samples)
    if "crisp" in names:
        scene.crisp = curves.sample_curve(model.crisp_model(), doc.samples)
    if "defuzzified" in names:
        scene.defuzzified = curves.defuzzified_curve(model, doc.samples)
    out, close = _open_out(args.out)
    try:
        render_svg(scene, out)
    finally:
        if close:
            out.close()
    return 0


_HANDLERS = {
    "demo": _cmd_demo,
    "validate": _cmd_validate,
    "pipeline": _cmd_pipeline,
    "curve": _cmd_curve,
    "plot": _cmd_plot,
}


def run(argv=None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: cannot parse {getattr(args, 'file', '?')}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except T2SplineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
