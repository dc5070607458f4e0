"""Command line: ``euclidbench run|suite|render``.

Exit codes: 0 success (or every verdict as expected), 1 usage, IO or parse
error, 2 a script run stopped at a failing step.  ``suite`` exits 1 when a
verdict differs from the expectation for its model.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import EuclidError, ScriptError
from .fields import DEFAULT_WINDOW, field_for
from .geometry import PlaneModel

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def dump_json(data):
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _model_options(p):
    p.add_argument("--field", choices=("rational", "constructible", "nonarch"), default="constructible")
    p.add_argument("--subplane", action="store_true", help="interpret in the limited subplane (nonarch only)")
    p.add_argument("--truncation", type=int, default=DEFAULT_WINDOW, help="series truncation window (>= 4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH", help="write JSON here instead of standard output")


def build_parser():
    parser = _Parser(prog="euclidbench", description="Exact checks of Euclid Book I constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="execute a .euc construction script")
    run.add_argument("script")
    _model_options(run)
    run.add_argument("--svg", metavar="PATH", help="also draw the bound objects")
    suite = sub.add_parser("suite", help="check every bundled proposition against its expected verdict")
    _model_options(suite)
    render = sub.add_parser("render", help="draw a JSON trace or report as SVG")
    render.add_argument("report")
    render.add_argument("--id", help="proposition to draw from a suite report")
    render.add_argument("--svg", metavar="PATH", help="write SVG here instead of standard output")
    return parser


def model_from_args(args):
    if args.truncation < 4:
        raise UsageError("--truncation must be at least 4")
    if args.seed < 0:
        raise UsageError("--seed must be a natural number")
    if args.subplane and args.field != "nonarch":
        raise UsageError("--subplane needs --field nonarch")
    return PlaneModel(field_for(args.field, args.truncation), args.subplane)


def _emit(text, path):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_run(args):
    from .dsl import execute, parse_file
    from .render import render_svg

    model = model_from_args(args)
    script = parse_file(args.script)
    trace = execute(script, model, args.seed)
    data = trace.to_dict()
    _emit(dump_json(data), args.json)
    if args.svg:
        Path(args.svg).write_text(render_svg(data), encoding="utf-8")
    return EXIT_OK if trace.success else EXIT_FAILED


def suite_report(model, seed):
    from .props import EXPECTED, run_suite

    reports, ok = run_suite(model, seed)
    expected = EXPECTED[model.descriptor]
    props = {}
    for pid, report in reports.items():
        entry = report.to_dict()
        entry["expected"] = expected[pid]
        entry["as_expected"] = report.label == expected[pid]
        props[pid] = entry
    return {"model": model.descriptor, "seed": seed, "all_as_expected": ok, "propositions": props}, ok


def cmd_suite(args):
    model = model_from_args(args)
    data, ok = suite_report(model, args.seed)
    _emit(dump_json(data), args.json)
    for pid, entry in data["propositions"].items():
        mark = "ok  " if entry["as_expected"] else "FAIL"
        label = entry["verdict"] + (f"({entry['reason']})" if entry["verdict"] == "ConstructionImpossible" else "")
        print(f"{mark} {pid:<10} {label}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_USAGE


def cmd_render(args):
    from .render import render_svg

    data = json.loads(Path(args.report).read_text(encoding="utf-8"))
    if "propositions" in data:
        if not args.id:
            raise UsageError("a suite report holds several propositions; choose one with --id")
        if args.id not in data["propositions"]:
            raise UsageError(f"no proposition {args.id!r} in the report")
        data = data["propositions"][args.id]
    _emit(render_svg(data), args.svg)
    return EXIT_OK


COMMANDS = {"run": cmd_run, "suite": cmd_suite, "render": cmd_render}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as err:
        print(f"euclidbench: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, ScriptError, EuclidError) as err:
        print(f"euclidbench: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
