"""Virtual-table intermediate representation.

Tables, knowledge-graph triple sets and meaning representations all converge
to :class:`VirtualTable`: a grid of cells with optional column/row header
names, an optional title and sub-title, and an optional set of highlighted
coordinates. Serializers consume only this type.

Values are immutable after construction; instances can be shared freely
across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyHeader, EmptyTable, HighlightOutOfBounds


def normalize_ws(text: str) -> str:
    """Collapse internal whitespace runs to one space and trim the ends.

    This is the single normalization rule applied at ingestion; it is what
    makes every downstream serialization byte-deterministic.
    """
    return " ".join(text.split())


@dataclass(frozen=True)
class Cell:
    """One table cell: a value plus any column/row header names.

    Header lists may be empty; a cell converted from a graph node that never
    occurs as a tail, for example, carries no column header at all.
    """

    value: str
    col_headers: tuple[str, ...] = ()
    row_headers: tuple[str, ...] = ()


@dataclass(frozen=True)
class VirtualTable:
    """Canonical grid representation shared by all input forms.

    Rows may have unequal lengths (spanning and irregular cells occur in real
    tables); rectangularity is enforced only by serializations that need it.
    ``highlights`` is kept sorted by (row, column) and duplicate-free so that
    left-to-right, top-to-bottom emission is a plain traversal.
    """

    title: str | None = None
    sub_title: str | None = None
    rows: tuple[tuple[Cell, ...], ...] = ()
    highlights: tuple[tuple[int, int], ...] = ()


class Scheme(str, enum.Enum):
    """Serialization scheme of a linearized string."""

    UNIFIED = "unified"
    TOTTO = "totto"
    UNIFIEDSKG = "unifiedskg"
    LOGICNLG = "logicnlg"
    E2E_CONCAT = "e2e_concat"


class Orientation(str, enum.Enum):
    """Traversal order used by a serialization, if any."""

    HIGHLIGHTED = "highlighted"
    ROW = "row"
    COLUMN = "column"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class LinearizedText:
    """A serialization output: the token string plus its provenance tags."""

    text: str
    scheme: Scheme
    orientation: Orientation

    def __post_init__(self) -> None:
        if self.text != self.text.strip() or "  " in self.text:
            raise ValueError("linearized text must be single-spaced and trimmed")


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by :func:`validate`."""

    invariant: str
    location: str
    message: str


def make_cell(
    value: str,
    col_headers: Iterable[str] = (),
    row_headers: Iterable[str] = (),
) -> Cell:
    """Build a whitespace-normalized cell.

    Raises:
        EmptyHeader: if any header normalizes to the empty string.
    """
    cols = tuple(normalize_ws(h) for h in col_headers)
    rows = tuple(normalize_ws(h) for h in row_headers)
    if any(h == "" for h in cols + rows):
        raise EmptyHeader(f"cell {normalize_ws(value)!r} has an empty header")
    return Cell(value=normalize_ws(value), col_headers=cols, row_headers=rows)


def make_virtual_table(
    title: str | None = None,
    sub_title: str | None = None,
    rows: Sequence[Sequence[Cell | str]] = (),
    highlights: Iterable[Sequence[int]] = (),
) -> VirtualTable:
    """Build a canonical virtual table.

    Cell values, headers and titles are whitespace-normalized; a title that
    normalizes to the empty string counts as absent. Highlights are sorted by
    (row, column) and deduplicated. A bare string in ``rows`` is shorthand for
    a header-less cell.

    Raises:
        EmptyTable: if there are no rows or some row is empty.
        HighlightOutOfBounds: if a highlight does not index an existing cell.
        EmptyHeader: if a cell header normalizes to the empty string.
    """
    if not rows:
        raise EmptyTable("table has no rows")

    grid: list[tuple[Cell, ...]] = []
    for i, row in enumerate(rows):
        if not row:
            raise EmptyTable(f"row {i} is empty")
        cells = []
        for cell in row:
            if isinstance(cell, str):
                cells.append(make_cell(cell))
            else:
                cells.append(make_cell(cell.value, cell.col_headers, cell.row_headers))
        grid.append(tuple(cells))

    canonical: set[tuple[int, int]] = set()
    for pair in highlights:
        r, c = pair[0], pair[1]
        if not (0 <= r < len(grid) and 0 <= c < len(grid[r])):
            raise HighlightOutOfBounds(
                (r, c), f"highlight ({r}, {c}) outside a {len(grid)}-row grid"
            )
        canonical.add((r, c))

    norm_title = normalize_ws(title) if title is not None else ""
    norm_sub = normalize_ws(sub_title) if sub_title is not None else ""
    return VirtualTable(
        title=norm_title or None,
        sub_title=norm_sub or None,
        rows=tuple(grid),
        highlights=tuple(sorted(canonical)),
    )


def validate(table: VirtualTable) -> list[Violation]:
    """Report every invariant violation in ``table``.

    Returns an empty list iff all invariants hold. Validation never raises;
    it exists to check instances assembled outside :func:`make_virtual_table`.
    """
    found: list[Violation] = []

    if not table.rows:
        found.append(Violation("EmptyTable", "rows", "table has no rows"))
    for i, row in enumerate(table.rows):
        if not row:
            found.append(Violation("EmptyTable", f"row {i}", "row is empty"))
        for j, cell in enumerate(row):
            loc = f"cell ({i}, {j})"
            if "\n" in cell.value or cell.value != normalize_ws(cell.value):
                found.append(
                    Violation("IllegalCellValue", loc, "value is not whitespace-normalized")
                )
            for kind, headers in (("col", cell.col_headers), ("row", cell.row_headers)):
                for h in headers:
                    if h == "":
                        found.append(Violation("EmptyHeader", loc, f"empty {kind} header"))
                    elif h != normalize_ws(h):
                        found.append(
                            Violation("IllegalCellValue", loc, f"{kind} header not normalized")
                        )

    previous: tuple[int, int] | None = None
    for n, (r, c) in enumerate(table.highlights):
        loc = f"highlight {n} -> ({r}, {c})"
        if not (0 <= r < len(table.rows) and 0 <= c < len(table.rows[r])):
            found.append(Violation("HighlightOutOfBounds", loc, "no such cell"))
        if previous is not None and (r, c) <= previous:
            found.append(
                Violation("HighlightNotCanonical", loc, "highlights unsorted or duplicated")
            )
        previous = (r, c)

    return found
