"""Canonical JSONL record schema, streaming reader, and batch conversion.

One JSON object per line, three input forms behind one schema::

    {"id": "...", "form": "table", "payload": {"title": ..., "sub_title": ...,
        "rows": [[{"value": ..., "col_headers": [...], "row_headers": [...]},
                  "bare string = header-less cell", ...], ...],
        "highlights": [[row, col], ...]},
     "meta": {...}}
    {"id": "...", "form": "kg", "payload": {"triples": [[head, relation, tail], ...]}}
    {"id": "...", "form": "mr", "payload": {"text": "attr[value], ..."}}

``meta`` is optional and passes through to outputs untouched. Reading is
streaming: memory is bounded by the largest single record, not the file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator

from . import legacy, unified
from .errors import (
    IncompatibleScheme,
    IoError,
    JsonError,
    SchemaError,
    VirtabError,
)
from .ir import Cell, LinearizedText, Orientation, Scheme, VirtualTable, make_virtual_table
from .kg import connected_components, parse_triples, triples_to_virtual_table
from .mr import mr_to_virtual_table, parse_mr

FORMS = ("table", "kg", "mr")


@dataclass(frozen=True)
class Record:
    """One input record: a shape-checked payload plus passthrough metadata."""

    id: str
    form: str
    payload: dict[str, Any]
    meta: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ReadError:
    """A per-line failure yielded inline so streaming never aborts."""

    line: int
    error: VirtabError

    @property
    def code(self) -> str:
        return self.error.code


@dataclass(frozen=True)
class OutputRecord:
    """One serialization result, ready to be written as a JSONL line."""

    id: str
    scheme: Scheme
    orientation: Orientation
    text: str
    warnings: tuple[str, ...] = ()
    meta: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        obj: dict[str, Any] = {
            "id": self.id,
            "scheme": self.scheme.value,
            "orientation": self.orientation.value,
            "text": self.text,
            "warnings": list(self.warnings),
        }
        if self.meta:
            obj["meta"] = self.meta
        return json.dumps(obj, ensure_ascii=False)


def _check_cell(obj: Any, line: int | None, where: str) -> None:
    if isinstance(obj, str):
        return
    if not isinstance(obj, dict):
        raise SchemaError(line, where, "cell must be a string or an object")
    if not isinstance(obj.get("value"), str):
        raise SchemaError(line, f"{where}.value", "missing or non-string value")
    for key in ("col_headers", "row_headers"):
        headers = obj.get(key, [])
        if not isinstance(headers, list) or any(not isinstance(h, str) for h in headers):
            raise SchemaError(line, f"{where}.{key}", "must be a list of strings")


def _check_payload(form: str, payload: Any, line: int | None) -> dict[str, Any]:
    if not isinstance(payload, dict):
        raise SchemaError(line, "payload", "must be an object")
    if form == "table":
        rows = payload.get("rows")
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise SchemaError(line, "payload.rows", "must be a list of lists")
        for i, row in enumerate(rows):
            for j, cell in enumerate(row):
                _check_cell(cell, line, f"payload.rows[{i}][{j}]")
        for key in ("title", "sub_title"):
            if payload.get(key) is not None and not isinstance(payload[key], str):
                raise SchemaError(line, f"payload.{key}", "must be a string or null")
        highlights = payload.get("highlights", [])
        if not isinstance(highlights, list):
            raise SchemaError(line, "payload.highlights", "must be a list")
        for k, pair in enumerate(highlights):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or any(not isinstance(x, int) or isinstance(x, bool) for x in pair)
            ):
                raise SchemaError(
                    line, f"payload.highlights[{k}]", "must be a [row, col] integer pair"
                )
    elif form == "kg":
        triples = payload.get("triples")
        if not isinstance(triples, list) or any(not isinstance(t, list) for t in triples):
            raise SchemaError(line, "payload.triples", "must be a list of lists")
    elif form == "mr":
        if not isinstance(payload.get("text"), str):
            raise SchemaError(line, "payload.text", "missing or non-string text")
    else:
        raise SchemaError(line, "form", f"unknown form {form!r}")
    return payload


def record_from_obj(obj: Any, line: int | None = None) -> Record:
    """Shape-check one decoded JSON object into a Record.

    Adapter-level problems (bad triples, MR syntax, highlight bounds) are not
    checked here; they surface at conversion time, tagged with the record id.
    """
    if not isinstance(obj, dict):
        raise SchemaError(line, "record", "must be a JSON object")
    rec_id = obj.get("id")
    if not isinstance(rec_id, str) or rec_id == "":
        raise SchemaError(line, "id", "missing or empty id")
    form = obj.get("form")
    if form not in FORMS:
        raise SchemaError(line, "form", f"must be one of {'/'.join(FORMS)}")
    payload = _check_payload(form, obj.get("payload"), line)
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise SchemaError(line, "meta", "must be an object")
    return Record(id=rec_id, form=form, payload=payload, meta=meta)


def read_records(path: str | Path) -> Iterator[Record | ReadError]:
    """Stream records from a JSONL file, yielding per-line errors inline.

    Yields :class:`Record` for good lines and :class:`ReadError` for bad ones
    (invalid JSON, schema violations, duplicate ids); the stream itself only
    stops at end of file. Blank lines are skipped.

    Raises:
        IoError: if the file cannot be opened.
    """
    path = Path(path)
    try:
        stream = path.open("r", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot open {path}: {exc}") from exc

    seen_ids: set[str] = set()
    with stream:
        for line_no, raw in enumerate(stream, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                yield ReadError(line_no, JsonError(line_no, str(exc)))
                continue
            try:
                record = record_from_obj(obj, line_no)
            except SchemaError as exc:
                yield ReadError(line_no, exc)
                continue
            if record.id in seen_ids:
                yield ReadError(
                    line_no, SchemaError(line_no, "id", f"duplicate id {record.id!r}")
                )
                continue
            seen_ids.add(record.id)
            yield record


def table_from_payload(payload: dict[str, Any]) -> VirtualTable:
    """Build the virtual table described by a table-form payload."""
    rows = [
        [cell if isinstance(cell, str) else Cell(
            cell["value"],
            tuple(cell.get("col_headers", [])),
            tuple(cell.get("row_headers", [])),
        ) for cell in row]
        for row in payload["rows"]
    ]
    highlights = [tuple(pair) for pair in payload.get("highlights", [])]
    return make_virtual_table(payload.get("title"), payload.get("sub_title"), rows, highlights)


def table_to_payload(table: VirtualTable) -> dict[str, Any]:
    """Serialize a virtual table to the canonical payload shape."""
    return {
        "title": table.title,
        "sub_title": table.sub_title,
        "rows": [
            [
                {
                    "value": cell.value,
                    "col_headers": list(cell.col_headers),
                    "row_headers": list(cell.row_headers),
                }
                for cell in row
            ]
            for row in table.rows
        ],
        "highlights": [list(pair) for pair in table.highlights],
    }


#: (form, scheme) -> allowed orientations. Static applicability: combinations
#: absent here can never produce output for that form (kg and mr payloads
#: carry no highlights; kg tables routinely hold header-less lead cells that
#: the column traversal cannot represent; legacy schemes are pinned to the
#: form they historically serialized).
COMPATIBILITY: dict[tuple[str, Scheme], frozenset[Orientation]] = {
    ("table", Scheme.UNIFIED): frozenset(
        {Orientation.HIGHLIGHTED, Orientation.ROW, Orientation.COLUMN}
    ),
    ("kg", Scheme.UNIFIED): frozenset({Orientation.ROW}),
    ("mr", Scheme.UNIFIED): frozenset({Orientation.ROW, Orientation.COLUMN}),
    ("table", Scheme.TOTTO): frozenset({Orientation.HIGHLIGHTED}),
    ("kg", Scheme.UNIFIEDSKG): frozenset({Orientation.NOT_APPLICABLE}),
    ("table", Scheme.LOGICNLG): frozenset({Orientation.ROW}),
    ("mr", Scheme.E2E_CONCAT): frozenset({Orientation.NOT_APPLICABLE}),
}

#: Fixed orientation of every non-unified scheme.
FIXED_ORIENTATION: dict[Scheme, Orientation] = {
    Scheme.TOTTO: Orientation.HIGHLIGHTED,
    Scheme.UNIFIEDSKG: Orientation.NOT_APPLICABLE,
    Scheme.LOGICNLG: Orientation.ROW,
    Scheme.E2E_CONCAT: Orientation.NOT_APPLICABLE,
}


def effective_orientation(scheme: Scheme, orientation: Orientation | None) -> Orientation:
    """Resolve the orientation actually used for a scheme.

    The unified scheme requires an explicit orientation; every other scheme
    has a fixed one, and an explicit argument must agree with it.
    """
    if scheme is Scheme.UNIFIED:
        if orientation is None or orientation is Orientation.NOT_APPLICABLE:
            raise ValueError("scheme 'unified' requires an orientation")
        return orientation
    fixed = FIXED_ORIENTATION[scheme]
    if orientation is not None and orientation is not fixed:
        raise ValueError(f"scheme {scheme.value!r} has fixed orientation {fixed.value!r}")
    return fixed


def is_compatible(form: str, scheme: Scheme, orientation: Orientation) -> bool:
    """True if (scheme, orientation) can ever apply to records of ``form``."""
    return orientation in COMPATIBILITY.get((form, scheme), frozenset())


def _linearize_unified(table: VirtualTable, orientation: Orientation) -> LinearizedText:
    if orientation is Orientation.HIGHLIGHTED:
        return unified.linearize_highlighted(table)
    if orientation is Orientation.ROW:
        return unified.linearize_rows(table)
    return unified.linearize_columns(table)


def convert_record(
    record: Record, scheme: Scheme, orientation: Orientation | None = None
) -> list[OutputRecord]:
    """Convert one record under a scheme, returning its output records.

    A kg record under the unified scheme yields one output per connected
    component with ids suffixed ``#1``, ``#2``, ...; every other combination
    yields exactly one output.

    Raises:
        IncompatibleScheme: the (scheme, orientation) pair can never apply to
            this record's form.
        VirtabError: adapter and serializer errors propagate with
            ``record_id`` set to this record's id.
    """
    try:
        return _convert_record(record, scheme, orientation)
    except VirtabError as exc:
        exc.record_id = record.id
        raise


def _convert_record(
    record: Record, scheme: Scheme, orientation: Orientation | None
) -> list[OutputRecord]:
    orientation = effective_orientation(scheme, orientation)
    if not is_compatible(record.form, scheme, orientation):
        raise IncompatibleScheme(
            f"form {record.form!r} does not support scheme {scheme.value!r} "
            f"with orientation {orientation.value!r}"
        )

    def output(rec_id: str, lt: LinearizedText, warnings: list[str]) -> OutputRecord:
        return OutputRecord(
            id=rec_id,
            scheme=lt.scheme,
            orientation=lt.orientation,
            text=lt.text,
            warnings=tuple(warnings),
            meta=record.meta,
        )

    if record.form == "table":
        table = table_from_payload(record.payload)
        if scheme is Scheme.UNIFIED:
            lt = _linearize_unified(table, orientation)
            warnings = unified.ambiguous_value_warnings(table)
        elif scheme is Scheme.TOTTO:
            lt = legacy.linearize_totto_variant(table)
            warnings = unified.ambiguous_value_warnings(table, legacy.TOTTO_TAGS)
        else:
            lt = legacy.linearize_logicnlg(table)
            warnings = []
        return [output(record.id, lt, warnings)]

    if record.form == "kg":
        ts = parse_triples(record.payload["triples"])
        if scheme is Scheme.UNIFIEDSKG:
            return [output(record.id, legacy.linearize_unifiedskg_kg(ts), [])]
        outputs = []
        for k, component in enumerate(connected_components(ts), start=1):
            table = triples_to_virtual_table(component)
            lt = _linearize_unified(table, orientation)
            warnings = unified.ambiguous_value_warnings(table)
            outputs.append(output(f"{record.id}#{k}", lt, warnings))
        return outputs

    mrs = parse_mr(record.payload["text"])
    if scheme is Scheme.E2E_CONCAT:
        return [output(record.id, legacy.linearize_e2e_concat(mrs), [])]
    table = mr_to_virtual_table(mrs)
    lt = _linearize_unified(table, orientation)
    return [output(record.id, lt, unified.ambiguous_value_warnings(table))]


@dataclass
class Stats:
    """Corpus summary: per-form counts, cell distribution, kg components."""

    records: int = 0
    errors: int = 0
    by_form: dict[str, int] = field(default_factory=lambda: {f: 0 for f in FORMS})
    cell_counts: list[int] = field(default_factory=list)
    kg_component_histogram: dict[int, int] = field(default_factory=dict)

    def to_obj(self) -> dict[str, Any]:
        cells = {
            "records": len(self.cell_counts),
            "total": sum(self.cell_counts),
            "min": min(self.cell_counts) if self.cell_counts else None,
            "max": max(self.cell_counts) if self.cell_counts else None,
            "mean": (
                round(sum(self.cell_counts) / len(self.cell_counts), 4)
                if self.cell_counts
                else None
            ),
        }
        histogram = {
            str(k): self.kg_component_histogram[k]
            for k in sorted(self.kg_component_histogram)
        }
        return {
            "records": self.records,
            "errors": self.errors,
            "by_form": self.by_form,
            "cells": cells,
            "kg": {
                "records": self.by_form["kg"],
                "components": histogram,
                "total_components": sum(k * v for k, v in self.kg_component_histogram.items()),
            },
        }


def collect_stats(path: str | Path) -> Stats:
    """Count records per form, cells per record, and kg component sizes.

    Records whose payload fails to adapt (bad triples, MR syntax, bad
    highlights) are counted as errors.
    """
    stats = Stats()
    for item in read_records(path):
        if isinstance(item, ReadError):
            stats.errors += 1
            continue
        stats.records += 1
        stats.by_form[item.form] += 1
        try:
            if item.form == "table":
                table = table_from_payload(item.payload)
                stats.cell_counts.append(sum(len(row) for row in table.rows))
            elif item.form == "kg":
                components = connected_components(parse_triples(item.payload["triples"]))
                n = len(components)
                stats.kg_component_histogram[n] = stats.kg_component_histogram.get(n, 0) + 1
                stats.cell_counts.append(
                    sum(len(triples_to_virtual_table(c).rows[0]) for c in components)
                )
            else:
                stats.cell_counts.append(len(parse_mr(item.payload["text"]).pairs))
        except VirtabError:
            stats.errors += 1
    return stats
