"""Textual meaning representations to virtual tables.

Handles the comma-separated ``Attribute[Value]`` form: each pair becomes a
cell whose value is the Value and whose single column header is the
Attribute. The grammar has no nesting or escaping; out-of-grammar input is
rejected loudly rather than guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MrSyntaxError
from .ir import VirtualTable, make_cell, make_virtual_table, normalize_ws


@dataclass(frozen=True)
class MrList:
    """Ordered (attribute, value) pairs parsed from one meaning representation."""

    pairs: tuple[tuple[str, str], ...]


def _fail(text: str, pos: int, message: str) -> MrSyntaxError:
    # report byte offsets so callers can point into the raw UTF-8 line
    return MrSyntaxError(message, len(text[:pos].encode("utf-8")))


def parse_mr(text: str) -> MrList:
    """Parse ``attr[value], attr[value], ...`` into an MrList.

    Grammar: an attribute is any run of characters excluding ``[`` and ``,``;
    a value is any run excluding ``]``; pairs are separated by commas and
    surrounding whitespace is ignored. Attributes and values must be
    non-empty after whitespace normalization; duplicates are kept in order.

    Raises:
        MrSyntaxError: unbalanced bracket, empty attribute or value, or
            trailing garbage, with the byte offset of the problem.
    """
    pairs: list[tuple[str, str]] = []
    pos = 0
    n = len(text)

    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        attr_start = pos
        while pos < n and text[pos] not in "[,":
            pos += 1
        if pos >= n or text[pos] == ",":
            raise _fail(text, attr_start, "expected 'attribute[' pair")
        attr = normalize_ws(text[attr_start:pos])
        if attr == "":
            raise _fail(text, attr_start, "empty attribute")

        bracket = pos
        pos += 1
        value_start = pos
        while pos < n and text[pos] != "]":
            pos += 1
        if pos >= n:
            raise _fail(text, bracket, "unclosed '['")
        value = normalize_ws(text[value_start:pos])
        if value == "":
            raise _fail(text, bracket, "empty value")
        pos += 1
        pairs.append((attr, value))

        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if text[pos] != ",":
            raise _fail(text, pos, "trailing garbage after pair")
        pos += 1

    return MrList(tuple(pairs))


def mr_to_virtual_table(mrs: MrList) -> VirtualTable:
    """Convert an MrList into a one-row virtual table.

    One cell per pair: value=Value, single column header=Attribute. No title,
    no highlights.
    """
    row = [make_cell(value, col_headers=(attr,)) for attr, value in mrs.pairs]
    return make_virtual_table(rows=[row])
