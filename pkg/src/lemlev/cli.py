"""Command-line front end: batch annotation, markup transforms, lookup, serving.

Exit codes: 0 ok, 2 input file errors, 3 resource-load errors, 4 usage
errors, 5 bind failures. Diagnostics go to stderr as `code<TAB>message` so
wrappers can parse them. Output bytes on stdout are exactly the library
emitters' bytes (the service returns the same bytes for the same text).
"""
from __future__ import annotations

import argparse
import json
import socket
import sys
from pathlib import Path

from .analyzer import analyze, most_likely
from .charts import render_distribution_chart
from .errors import ResourceError
from .markup import MarkupMode, apply_mode
from .readability import level_of
from .report import FORMATS, annotate_document, emit, stats
from .resources import Resources, ServiceConfig, load_config, load_resources
from .suggest import related
from .textproc import word_body

EXIT_OK = 0
EXIT_IO = 2
EXIT_RESOURCES = 3
EXIT_USAGE = 4
EXIT_BIND = 5


def _fail(code: int, message: str) -> None:
    print(f"{code}\t{message}", file=sys.stderr)
    raise SystemExit(code)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here says 4."""

    def error(self, message):
        _fail(EXIT_USAGE, message)


def _load(resource_dir: str | None) -> Resources:
    try:
        return load_resources(resource_dir)
    except ResourceError as exc:
        _fail(EXIT_RESOURCES, str(exc))
        raise  # unreachable; keeps type-checkers happy


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        _fail(EXIT_IO, f"{path}: {exc}")
        raise


def _write_bytes(payload: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
        return
    try:
        Path(out).write_bytes(payload)
    except OSError as exc:
        _fail(EXIT_IO, f"{out}: {exc}")


def _cmd_analyze(args) -> int:
    res = _load(args.resources)
    text = _read_text(args.file)
    doc = annotate_document(text, res.db, res.freq, res.lex)
    report = stats(doc.annotations)
    _write_bytes(emit(doc, report, args.format), args.out)
    if args.chart:
        try:
            render_distribution_chart(report, args.chart)
        except OSError as exc:
            _fail(EXIT_IO, f"{args.chart}: {exc}")
    return EXIT_OK


def _cmd_markup(args) -> int:
    res = _load(args.resources)
    text = _read_text(args.file)
    doc = annotate_document(text, res.db, res.freq, res.lex)
    out_text = apply_mode(text, MarkupMode(args.mode), doc.annotations)
    _write_bytes(out_text.encode("utf-8"), args.out)
    return EXIT_OK


def _cmd_lookup(args) -> int:
    res = _load(args.resources)
    analyses = analyze(word_body(args.word), res.db)
    if not analyses:
        print("no analyses")
        return EXIT_OK
    by_level: dict = {}
    for a in analyses:
        by_level.setdefault(level_of(a, res.lex), []).append(a)
    for level in sorted(by_level, key=lambda lv: lv.sort_key):
        print(f"level {level.token}:")
        for a in sorted(by_level[level], key=lambda a: (a.lemma, a.pos, a.diac)):
            print(f"  {a.lemma}\t{a.pos}\t{a.diac}\t{a.gloss}")
    chosen = most_likely(analyses, res.freq)
    groups = related(chosen.lemma, chosen.pos, res.relations, res.lex)
    if any(groups.values()):
        print("suggestions:")
        for relation, items in groups.items():
            for s in items:
                print(f"  {relation.value}\t{s.lemma}\t{s.pos}\t{s.level.token}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    try:
        config = load_config(args.config) if args.config else ServiceConfig()
    except (ResourceError, ValueError, json.JSONDecodeError) as exc:
        _fail(EXIT_RESOURCES, f"config: {exc}")
        raise
    if args.host:
        config = ServiceConfig(
            args.host, config.port, config.resource_dir, config.profile_name, config.palette
        )
    if args.port is not None:
        config = ServiceConfig(
            config.host, args.port, config.resource_dir, config.profile_name, config.palette
        )
    if args.resources:
        config = ServiceConfig(
            config.host, config.port, Path(args.resources), config.profile_name, config.palette
        )
    res = _load(str(config.resource_dir) if config.resource_dir else None)

    # Fail fast with a distinct code when the port is taken.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((config.host, config.port))
    except OSError as exc:
        _fail(EXIT_BIND, f"cannot bind {config.host}:{config.port}: {exc}")
    finally:
        probe.close()

    print(f"serving on http://{config.host}:{config.port}", file=sys.stderr)
    from . import service

    service.run(config, res)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lemlev",
        description="Word-level Arabic readability annotation.",
        epilog=(
            "exit codes: 0 ok, 2 file error, 3 resource error, 4 usage error, "
            "5 bind failure"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_resources(p):
        p.add_argument(
            "--resources",
            help="resource directory (default: $LEMLEV_RESOURCES or the built-in bundle)",
        )

    p = sub.add_parser("analyze", help="annotate a UTF-8 text file")
    p.add_argument("file")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--chart", help="also render a level-distribution chart to this image file")
    add_resources(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("markup", help="transform inline level markup")
    p.add_argument("file")
    p.add_argument("--mode", choices=[m.value for m in MarkupMode], required=True)
    p.add_argument("--out", help="write to a file instead of stdout")
    add_resources(p)
    p.set_defaults(func=_cmd_markup)

    p = sub.add_parser("lookup", help="show analyses and suggestions for one word")
    p.add_argument("word")
    add_resources(p)
    p.set_defaults(func=_cmd_lookup)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    add_resources(p)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
