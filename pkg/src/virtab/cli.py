"""Command-line surface: convert, stats, validate, parse.

Exit codes: 0 success, 1 usage, 2 data errors. Machine-readable diagnostics
go to stderr as JSON lines (kind: "error" | "skip" | "summary"); converted
records go to the output file in input order. ``VIRTAB_LOG_LEVEL`` controls
logging verbosity and nothing else.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .dataset_io import (
    OutputRecord,
    ReadError,
    collect_stats,
    convert_record,
    effective_orientation,
    is_compatible,
    read_records,
    table_to_payload,
)
from .errors import IoError, JsonError, SchemaError, VirtabError
from .ir import Orientation, Scheme
from .unified import (
    linearize_columns,
    linearize_highlighted,
    linearize_rows,
    parse_unified,
)

log = logging.getLogger("virtab")

SCHEME_FLAGS = {
    "unified": Scheme.UNIFIED,
    "totto": Scheme.TOTTO,
    "unifiedskg": Scheme.UNIFIEDSKG,
    "logicnlg": Scheme.LOGICNLG,
    "e2e-concat": Scheme.E2E_CONCAT,
}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for data."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(kind: str, **fields: Any) -> None:
    sys.stderr.write(json.dumps({"kind": kind, **fields}, ensure_ascii=False) + "\n")


def _open_out(path: str):
    try:
        return Path(path).open("w", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot open {path}: {exc}") from exc


def _roundtrip_ok(out: OutputRecord) -> bool:
    # only the unified scheme is round-trippable by design; tag-lookalike
    # cell text (flagged as AmbiguousValue warnings) fails here
    try:
        table, orientation = parse_unified(out.text)
    except VirtabError:
        return False
    if orientation is not out.orientation:
        return False
    if orientation is Orientation.HIGHLIGHTED:
        again = linearize_highlighted(table)
    elif orientation is Orientation.ROW:
        again = linearize_rows(table)
    else:
        again = linearize_columns(table)
    return again.text == out.text


def cmd_convert(args: argparse.Namespace) -> int:
    scheme = SCHEME_FLAGS[args.scheme]
    orientation = Orientation(args.orientation) if args.orientation else None
    try:
        orientation = effective_orientation(scheme, orientation)
    except ValueError as exc:
        _emit("error", code="Usage", message=str(exc))
        return EXIT_USAGE

    records = outputs = skipped = errors = 0
    with _open_out(args.out) as sink:
        for item in read_records(args.infile):
            if isinstance(item, ReadError):
                errors += 1
                _emit("error", line=item.line, code=item.code, message=str(item.error))
                if args.strict:
                    return EXIT_DATA
                continue
            records += 1
            if not is_compatible(item.form, scheme, orientation):
                skipped += 1
                _emit(
                    "skip",
                    id=item.id,
                    code="IncompatibleScheme",
                    message=f"form {item.form!r} not serializable as "
                    f"{scheme.value}/{orientation.value}",
                )
                continue
            try:
                results = convert_record(item, scheme, orientation)
            except VirtabError as exc:
                errors += 1
                _emit("error", id=item.id, code=exc.code, message=str(exc))
                if args.strict:
                    return EXIT_DATA
                continue
            log.debug("converted %s into %d output(s)", item.id, len(results))
            for out in results:
                if args.validate and scheme is Scheme.UNIFIED and not _roundtrip_ok(out):
                    errors += 1
                    _emit(
                        "error",
                        id=out.id,
                        code="RoundTripMismatch",
                        message="re-serializing the parsed output did not reproduce it",
                    )
                    if args.strict:
                        return EXIT_DATA
                    continue
                sink.write(out.to_json() + "\n")
                outputs += 1

    _emit("summary", records=records, outputs=outputs, skipped=skipped, errors=errors)
    return EXIT_DATA if errors else EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    stats = collect_stats(args.infile)
    sys.stdout.write(json.dumps(stats.to_obj(), ensure_ascii=False) + "\n")
    return EXIT_DATA if stats.errors else EXIT_OK


def _iter_text_lines(path: str, field: str):
    """Yield (line_no, id, text | VirtabError) from a JSONL text column."""
    try:
        stream = Path(path).open("r", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot open {path}: {exc}") from exc
    with stream:
        for line_no, raw in enumerate(stream, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                yield line_no, None, JsonError(line_no, str(exc))
                continue
            rec_id = obj.get("id") if isinstance(obj, dict) else None
            if not isinstance(obj, dict) or not isinstance(obj.get(field), str):
                yield line_no, rec_id, SchemaError(line_no, field, "missing text column")
                continue
            yield line_no, rec_id, obj[field]


def cmd_validate(args: argparse.Namespace) -> int:
    checked = failed = 0
    for line_no, rec_id, text in _iter_text_lines(args.infile, args.field):
        if isinstance(text, VirtabError):
            failed += 1
            _emit("error", line=line_no, id=rec_id, code=text.code, message=str(text))
            continue
        checked += 1
        try:
            parse_unified(text)
        except VirtabError as exc:
            failed += 1
            _emit("error", line=line_no, id=rec_id, code=exc.code, message=str(exc))
    sys.stdout.write(json.dumps({"checked": checked, "failed": failed}) + "\n")
    return EXIT_DATA if failed else EXIT_OK


def cmd_parse(args: argparse.Namespace) -> int:
    failed = 0
    with _open_out(args.out) as sink:
        for line_no, rec_id, text in _iter_text_lines(args.infile, args.field):
            result: dict[str, Any] = {"id": rec_id}
            if isinstance(text, VirtabError):
                failed += 1
                result.update(ok=False, code=text.code, message=str(text))
            else:
                try:
                    table, orientation = parse_unified(text)
                except VirtabError as exc:
                    failed += 1
                    result.update(ok=False, code=exc.code, message=str(exc))
                    if (offset := getattr(exc, "offset", None)) is not None:
                        result["offset"] = offset
                else:
                    result.update(
                        ok=True,
                        orientation=orientation.value,
                        table=table_to_payload(table),
                    )
            sink.write(json.dumps(result, ensure_ascii=False) + "\n")
    return EXIT_DATA if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="virtab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    convert = sub.add_parser("convert", help="serialize records from a JSONL file")
    convert.add_argument("--in", dest="infile", required=True, metavar="FILE")
    convert.add_argument("--out", required=True, metavar="FILE")
    convert.add_argument("--scheme", required=True, choices=sorted(SCHEME_FLAGS))
    convert.add_argument(
        "--orientation", choices=[o.value for o in Orientation if o is not Orientation.NOT_APPLICABLE]
    )
    convert.add_argument("--strict", action="store_true", help="abort on first error")
    convert.add_argument(
        "--validate", action="store_true", help="round-trip check every unified output"
    )
    convert.set_defaults(func=cmd_convert)

    stats = sub.add_parser("stats", help="summarize a record corpus")
    stats.add_argument("--in", dest="infile", required=True, metavar="FILE")
    stats.set_defaults(func=cmd_stats)

    validate = sub.add_parser("validate", help="parse unified strings from a text column")
    validate.add_argument("--in", dest="infile", required=True, metavar="FILE")
    validate.add_argument("--field", default="text", help="JSON field holding the string")
    validate.set_defaults(func=cmd_validate)

    parse = sub.add_parser("parse", help="parse unified strings into table structures")
    parse.add_argument("--in", dest="infile", required=True, metavar="FILE")
    parse.add_argument("--out", required=True, metavar="FILE")
    parse.add_argument("--field", default="text", help="JSON field holding the string")
    parse.set_defaults(func=cmd_parse)

    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("VIRTAB_LOG_LEVEL", "WARNING").upper()
    if level not in {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"}:
        level = "WARNING"
    logging.basicConfig(level=level)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IoError as exc:
        _emit("error", code=exc.code, message=str(exc))
        return EXIT_DATA


def entrypoint() -> None:
    raise SystemExit(main())
