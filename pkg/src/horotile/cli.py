"""``horotile`` command line: reports, census runs, figures and the invariant suite.

Exit codes: 0 success, 1 a check failed (``verify``, or ``local-theorem``
returning NonCrystallographic), 2 usage, parse or validation errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from .corona import CensusWindow, census, local_theorem_check, min_census_width
from .errors import HorotileError, UnsupportedDimension
from .pools import classify_symmetry, pool_analysis
from .render import DISC, HALF_PLANE, MODELS, render_footprints, render_svg
from .seqcore import SequenceSpec
from .serialize import census_from_json, census_to_json, dumps, parse_spec, spec_hash, window_to_json
from .tiling import build_window, cell_box
from .verify import run_suite

log = logging.getLogger("horotile")

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


class UsageError(Exception):
    pass


def parse_range(text: str, what: str) -> tuple[int, int]:
    """``"3"`` -> (3, 3), ``"1..8"`` -> (1, 8), ``"-2..1"`` -> (-2, 1)."""
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"{what} must look like A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty {what} range {text!r}")
    return lo, hi


def _k_range(text):
    lo, hi = parse_range(text, "k")
    if lo < 0:
        raise argparse.ArgumentTypeError("k must be >= 0")
    return lo, hi


def _layer_range(text):
    return parse_range(text, "layers")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _style(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"style must be key=value, got {text!r}")
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _axes(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"axes must be comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="horotile", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_spec(sp, required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--spec", metavar="PATH", help="spec document (JSON)")
        g.add_argument("--inline", metavar="JSON", help="spec document given inline")

    def with_out(sp, help="write output here instead of stdout"):
        sp.add_argument("--out", metavar="PATH", help=help)

    sp = sub.add_parser("pools", parents=[common], help="pool count, walls and support signature")
    with_spec(sp)
    with_out(sp)

    sp = sub.add_parser("symmetry", parents=[common], help="symmetry group descriptor")
    with_spec(sp)
    with_out(sp)
    sp.add_argument("--assume-aperiodic", action="store_true",
                    help="treat a finite word as the prefix of an aperiodic sequence")
    sp.add_argument("--bounded-axes", type=_axes, default=(), metavar="I,J",
                    help="axes asserted eventually constant (finite words only)")

    sp = sub.add_parser("census", parents=[common], help="corona census for a range of k, one file per k")
    with_spec(sp)
    sp.add_argument("--k", type=_k_range, required=True, metavar="A..B")
    sp.add_argument("--layer", type=int, default=0, help="census layer (default 0)")
    sp.add_argument("--half-width", type=_positive, metavar="N",
                    help="cells per side of the centre (default: 2^(k+2) for d=1, else the minimum)")
    with_out(sp, help="directory for census files (default ./runs)")

    sp = sub.add_parser("local-theorem", parents=[common], help="local-theorem verdict from censuses k = A..B")
    with_spec(sp)
    sp.add_argument("--k", type=_k_range, default=(0, 4), metavar="A..B")
    sp.add_argument("--runs", metavar="DIR", help="reuse census files from this directory")
    sp.add_argument("--half-width", type=_positive, metavar="N")
    with_out(sp)

    sp = sub.add_parser("window", parents=[common], help="dump a finite window of the tiling")
    with_spec(sp)
    sp.add_argument("--layers", type=_layer_range, default=(0, 2), metavar="A..B")
    sp.add_argument("--half-width", type=_positive, default=4, metavar="N",
                    help="half-width in cells of the lowest layer (default 4)")
    with_out(sp)

    sp = sub.add_parser("render", parents=[common], help="SVG figure of a window")
    with_spec(sp, required=False)
    sp.add_argument("--dim", type=_positive, help="use the all-plus spec of this dimension")
    sp.add_argument("--layers", type=_layer_range, default=(0, 3), metavar="A..B")
    sp.add_argument("--half-width", type=_positive, default=4, metavar="N")
    sp.add_argument("--model", choices=MODELS, default=HALF_PLANE)
    sp.add_argument("--style", type=_style, action="append", default=[], metavar="KEY=VALUE")
    with_out(sp)

    sub.add_parser("verify", parents=[common], help="run the full invariant suite")
    return p


def load_spec(args) -> SequenceSpec:
    if getattr(args, "inline", None):
        return parse_spec(args.inline)
    path = Path(args.spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read spec {path}: {exc.strerror}") from None
    return parse_spec(text)


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def census_window(spec: SequenceSpec, k: int, layer: int, half_width: int | None) -> CensusWindow:
    if half_width is None:
        half_width = 1 << (k + 2) if spec.dim == 1 else max(1, min_census_width(k) // 2)
    return CensusWindow(layer, half_width)


def census_path(directory: Path, spec: SequenceSpec, k: int, window: CensusWindow) -> Path:
    return directory / f"census-{spec_hash(spec)}-k{k}-l{window.layer}-w{window.half_width}.json"


def cmd_pools(args) -> int:
    emit(dumps(pool_analysis(load_spec(args)).to_json()), args.out)
    return 0


def cmd_symmetry(args) -> int:
    spec = load_spec(args)
    report = classify_symmetry(spec, args.assume_aperiodic, args.bounded_axes)
    emit(dumps(report.to_json()), args.out)
    return 0


def cmd_census(args) -> int:
    spec = load_spec(args)
    out = Path(args.out or "runs")
    out.mkdir(parents=True, exist_ok=True)
    lines = ["k\tN_k\tfile"]
    for k in range(args.k[0], args.k[1] + 1):
        window = census_window(spec, k, args.layer, args.half_width)
        path = census_path(out, spec, k, window)
        report = census(spec, k, window)
        path.write_text(dumps(census_to_json(spec, report)))
        log.info("k=%d: %d classes -> %s", k, report.n_classes, path)
        lines.append(f"{k}\t{report.n_classes}\t{path.name}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_local_theorem(args) -> int:
    spec = load_spec(args)
    reports = []
    for k in range(args.k[0], args.k[1] + 1):
        window = census_window(spec, k, 0, args.half_width)
        path = census_path(Path(args.runs), spec, k, window) if args.runs else None
        if path is not None and path.exists():
            _, report = census_from_json(json.loads(path.read_text()))
            log.info("k=%d: reusing %s", k, path)
        else:
            report = census(spec, k, window)
        reports.append(report)
    verdict = local_theorem_check(reports)
    emit(dumps({"summary": str(verdict), **verdict.to_json()}), args.out)
    return 0 if verdict.crystallographic else 1


def cmd_window(args) -> int:
    spec = load_spec(args)
    box = cell_box(spec, args.layers[0], args.half_width)
    emit(dumps(window_to_json(build_window(spec, args.layers, box))), args.out)
    return 0


def cmd_render(args) -> int:
    if args.spec or args.inline:
        spec = load_spec(args)
        if args.dim is not None and args.dim != spec.dim:
            raise UsageError(f"--dim {args.dim} does not match the spec file (d={spec.dim})")
    elif args.dim is not None:
        spec = SequenceSpec.constant((1,) * args.dim)
    else:
        raise UsageError("render needs --spec, --inline or --dim")
    if spec.dim == 2 and args.model == DISC:
        raise UnsupportedDimension("the disc model draws H^2 only (d=1); d=2 supports the footprint diagram")
    if spec.dim > 2:
        raise UnsupportedDimension(f"no figures for d={spec.dim}")
    box = cell_box(spec, args.layers[0], args.half_width)
    window = build_window(spec, args.layers, box)
    style = dict(args.style)
    svg = render_svg(window, args.model, style) if spec.dim == 1 else render_footprints(window, style)
    emit(svg, args.out)
    return 0


def cmd_verify(args) -> int:
    for name, witness in run_suite():
        if witness is not None:
            print(f"FAIL {name}: {witness}", file=sys.stderr)
            return 1
        print(f"PASS {name}")
    return 0


COMMANDS = {
    "pools": cmd_pools,
    "symmetry": cmd_symmetry,
    "census": cmd_census,
    "local-theorem": cmd_local_theorem,
    "window": cmd_window,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers = [handler]
    log.propagate = False
    log.setLevel(logging.WARNING - 10 * min(args.verbose, 2))
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HorotileError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
