"""Tagged serialization of virtual tables, and the strict round-trip parser.

The format wraps titles, rows, columns, cells and header names in paired
``<x>`` / ``</x>`` units and joins everything with single ASCII spaces; no
indentation, no escaping. Three traversals are supported: the highlighted
cells only (left-to-right, top-to-bottom), the whole grid row by row, or the
whole grid column by column.

Cell text that itself contains a token spelled exactly like a tag is emitted
verbatim; :func:`ambiguous_value_warnings` flags such cells, since silently
mangling data would be worse than a warning.

Inside a cell, row-header units come after column-header units. No reference
listing exercises ``<row_header>``, so that position is a convention of this
toolkit, kept symmetric with ``<col_header>``.
"""

from __future__ import annotations

from .errors import (
    EmptyDocument,
    InconsistentColumnHeaders,
    NoHighlights,
    NotRectangular,
    UnbalancedTag,
    UnexpectedToken,
)
from .ir import (
    Cell,
    LinearizedText,
    Orientation,
    Scheme,
    VirtualTable,
    make_virtual_table,
)

TABLE, TABLE_END = "<table>", "</table>"
ROW, ROW_END = "<row>", "</row>"
COLUMN, COLUMN_END = "<column>", "</column>"
CELL, CELL_END = "<cell>", "</cell>"
COL_HEADER, COL_HEADER_END = "<col_header>", "</col_header>"
ROW_HEADER, ROW_HEADER_END = "<row_header>", "</row_header>"
TITLE, TITLE_END = "<title>", "</title>"
SUB_TITLE, SUB_TITLE_END = "<sub_title>", "</sub_title>"

#: Every tag token of the unified format.
UNIFIED_TAGS = frozenset(
    {
        TABLE, TABLE_END, ROW, ROW_END, COLUMN, COLUMN_END, CELL, CELL_END,
        COL_HEADER, COL_HEADER_END, ROW_HEADER, ROW_HEADER_END,
        TITLE, TITLE_END, SUB_TITLE, SUB_TITLE_END,
    }
)


def _title_parts(
    table: VirtualTable, title_tags: tuple[str, str], sub_title_tags: tuple[str, str]
) -> list[str]:
    parts: list[str] = []
    if table.title:
        parts += [title_tags[0], table.title, title_tags[1]]
    if table.sub_title:
        parts += [sub_title_tags[0], table.sub_title, sub_title_tags[1]]
    return parts


def _cell_parts(cell: Cell) -> list[str]:
    # col_header units precede row_header units; header units are omitted
    # entirely for header-less cells
    parts = [CELL]
    if cell.value:
        parts.append(cell.value)
    for h in cell.col_headers:
        parts += [COL_HEADER, h, COL_HEADER_END]
    for h in cell.row_headers:
        parts += [ROW_HEADER, h, ROW_HEADER_END]
    parts.append(CELL_END)
    return parts


def _highlighted_parts(
    table: VirtualTable, title_tags: tuple[str, str], sub_title_tags: tuple[str, str]
) -> str:
    if not table.highlights:
        raise NoHighlights("table has no highlighted cells")
    parts = _title_parts(table, title_tags, sub_title_tags)
    parts.append(TABLE)
    for r, c in table.highlights:
        parts += _cell_parts(table.rows[r][c])
    parts.append(TABLE_END)
    return " ".join(parts)


def linearize_highlighted(table: VirtualTable) -> LinearizedText:
    """Serialize only the highlighted cells, in their canonical order.

    Raises:
        NoHighlights: if the table has no highlighted cells.
    """
    text = _highlighted_parts(table, (TITLE, TITLE_END), (SUB_TITLE, SUB_TITLE_END))
    return LinearizedText(text, Scheme.UNIFIED, Orientation.HIGHLIGHTED)


def linearize_rows(table: VirtualTable) -> LinearizedText:
    """Serialize the whole grid row by row. Highlights are ignored."""
    parts = _title_parts(table, (TITLE, TITLE_END), (SUB_TITLE, SUB_TITLE_END))
    parts.append(TABLE)
    for row in table.rows:
        parts.append(ROW)
        for cell in row:
            parts += _cell_parts(cell)
        parts.append(ROW_END)
    parts.append(TABLE_END)
    return LinearizedText(" ".join(parts), Scheme.UNIFIED, Orientation.ROW)


def linearize_columns(table: VirtualTable) -> LinearizedText:
    """Serialize the whole grid column by column, cells top to bottom.

    Each column is emitted as its (single, shared) column header followed by
    the bare cell values. Row headers have no slot in this traversal and are
    not emitted.

    Raises:
        NotRectangular: if rows have unequal lengths.
        InconsistentColumnHeaders: if some cell lacks exactly one column
            header, or a column's cells disagree on it.
    """
    width = len(table.rows[0]) if table.rows else 0
    for i, row in enumerate(table.rows):
        if len(row) != width:
            raise NotRectangular(f"row {i} has {len(row)} cells, expected {width}")

    parts = _title_parts(table, (TITLE, TITLE_END), (SUB_TITLE, SUB_TITLE_END))
    parts.append(TABLE)
    for j in range(width):
        header: str | None = None
        for i, row in enumerate(table.rows):
            cell = row[j]
            if len(cell.col_headers) != 1:
                raise InconsistentColumnHeaders(
                    f"cell ({i}, {j}) has {len(cell.col_headers)} column headers, expected 1"
                )
            if header is None:
                header = cell.col_headers[0]
            elif cell.col_headers[0] != header:
                raise InconsistentColumnHeaders(
                    f"column {j} mixes headers {header!r} and {cell.col_headers[0]!r}"
                )
        parts += [COLUMN, COL_HEADER, header or "", COL_HEADER_END]
        for row in table.rows:
            parts.append(CELL)
            if row[j].value:
                parts.append(row[j].value)
            parts.append(CELL_END)
        parts.append(COLUMN_END)
    parts.append(TABLE_END)
    return LinearizedText(" ".join(parts), Scheme.UNIFIED, Orientation.COLUMN)


def ambiguous_value_warnings(table: VirtualTable, tags: frozenset[str] = UNIFIED_TAGS) -> list[str]:
    """Warn about text whose tokens collide with tag spellings.

    Such text is emitted verbatim and will confuse the round-trip parser;
    callers surface these as per-record warnings.
    """
    warnings: list[str] = []

    def check(text: str | None, where: str) -> None:
        if not text:
            return
        hits = sorted(set(text.split()) & tags)
        if hits:
            warnings.append(f"AmbiguousValue: {where} contains tag token(s) {', '.join(hits)}")

    check(table.title, "title")
    check(table.sub_title, "sub_title")
    for i, row in enumerate(table.rows):
        for j, cell in enumerate(row):
            check(cell.value, f"cell ({i}, {j})")
            for h in cell.col_headers + cell.row_headers:
                check(h, f"cell ({i}, {j}) header")
    return warnings


class _TokenParser:
    """Recursive-descent parser over space-separated tokens."""

    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str | None:
        token = self.peek()
        if token is not None:
            self.pos += 1
        return token

    def expect_close(self, close_tag: str) -> None:
        token = self.peek()
        if token == close_tag:
            self.pos += 1
            return
        if token is None or (token in UNIFIED_TAGS and token.startswith("</")):
            raise UnbalancedTag(
                f"expected {close_tag}, got {token or 'end of input'}", self.pos
            )
        raise UnexpectedToken(token, self.pos, f"expected {close_tag}")

    def words(self) -> str:
        collected = []
        while (token := self.peek()) is not None and token not in UNIFIED_TAGS:
            collected.append(token)
            self.pos += 1
        return " ".join(collected)

    def unit_text(self, open_tag: str, close_tag: str) -> str:
        # a headed unit (title, header): requires at least one word
        self.take()
        text = self.words()
        if not text:
            raise UnexpectedToken(
                self.peek() or "end of input", self.pos, f"empty {open_tag} unit"
            )
        self.expect_close(close_tag)
        return text

    def cell(self) -> Cell:
        self.take()  # <cell>
        value = self.words()
        col_headers = []
        while self.peek() == COL_HEADER:
            col_headers.append(self.unit_text(COL_HEADER, COL_HEADER_END))
        row_headers = []
        while self.peek() == ROW_HEADER:
            row_headers.append(self.unit_text(ROW_HEADER, ROW_HEADER_END))
        self.expect_close(CELL_END)
        return Cell(value, tuple(col_headers), tuple(row_headers))

    def value_cell(self) -> str:
        # column traversal emits bare values; header units inside are illegal
        self.take()  # <cell>
        value = self.words()
        self.expect_close(CELL_END)
        return value


def parse_unified(text: str) -> tuple[VirtualTable, Orientation]:
    """Parse a unified-format string back into a virtual table.

    The parse is strict against the emitted grammar; only whitespace-delimited
    exact tag tokens count as tags, everything else is cell text. Orientation
    is inferred from the first child of ``<table>``. A highlighted parse
    yields a single row holding the highlighted cells, all marked highlighted,
    so re-serializing it reproduces the input.

    Raises:
        EmptyDocument: no tokens at all.
        UnbalancedTag: missing or mismatched close tag.
        UnexpectedToken: any other grammar violation, with token offset.
    """
    tokens = text.split()
    if not tokens:
        raise EmptyDocument("no tokens")
    p = _TokenParser(tokens)

    title = p.unit_text(TITLE, TITLE_END) if p.peek() == TITLE else None
    sub_title = p.unit_text(SUB_TITLE, SUB_TITLE_END) if p.peek() == SUB_TITLE else None

    token = p.peek()
    if token != TABLE:
        raise UnexpectedToken(token or "end of input", p.pos, f"expected {TABLE}")
    p.take()

    first = p.peek()
    if first == CELL:
        cells = []
        while p.peek() == CELL:
            cells.append(p.cell())
        p.expect_close(TABLE_END)
        orientation = Orientation.HIGHLIGHTED
        table = make_virtual_table(
            title, sub_title, [cells], [(0, j) for j in range(len(cells))]
        )
    elif first == ROW:
        grid = []
        while p.peek() == ROW:
            p.take()
            row = []
            while p.peek() == CELL:
                row.append(p.cell())
            if not row:
                raise UnexpectedToken(p.peek() or "end of input", p.pos, "empty <row>")
            p.expect_close(ROW_END)
            grid.append(row)
        p.expect_close(TABLE_END)
        orientation = Orientation.ROW
        table = make_virtual_table(title, sub_title, grid, [])
    elif first == COLUMN:
        columns: list[tuple[str, list[str]]] = []
        while p.peek() == COLUMN:
            p.take()
            header = p.unit_text(COL_HEADER, COL_HEADER_END) if p.peek() == COL_HEADER else None
            if header is None:
                raise UnexpectedToken(
                    p.peek() or "end of input", p.pos, f"expected {COL_HEADER}"
                )
            values = []
            while p.peek() == CELL:
                values.append(p.value_cell())
            if not values:
                raise UnexpectedToken(p.peek() or "end of input", p.pos, "empty <column>")
            close_pos = p.pos
            p.expect_close(COLUMN_END)
            if columns and len(values) != len(columns[0][1]):
                raise UnexpectedToken(
                    COLUMN_END, close_pos,
                    f"column height {len(values)} != {len(columns[0][1])}",
                )
            columns.append((header, values))
        p.expect_close(TABLE_END)
        orientation = Orientation.COLUMN
        height = len(columns[0][1])
        grid = [
            [Cell(values[i], (header,)) for header, values in columns]
            for i in range(height)
        ]
        table = make_virtual_table(title, sub_title, grid, [])
    else:
        raise UnexpectedToken(first or "end of input", p.pos, "expected table contents")

    if (extra := p.peek()) is not None:
        raise UnexpectedToken(extra, p.pos, "trailing tokens after </table>")
    return table, orientation
