"""The four historical linearizations kept for varied-format corpora.

These reproduce, byte for byte, the formats that individual datasets shipped
with: ToTTo-style highlighted cells (different title tags), the
``head : relation : tail | ...`` triple concatenation, the LogicNLG row
sentence template, and plain ``attr[value]`` concatenation for MRs.
"""

from __future__ import annotations

from .errors import MissingHeader
from .ir import LinearizedText, Orientation, Scheme, VirtualTable, normalize_ws
from .kg import TripleSet
from .mr import MrList
from .unified import _highlighted_parts

PAGE_TITLE, PAGE_TITLE_END = "<page_title>", "</page_title>"
SECTION_TITLE, SECTION_TITLE_END = "<section_title>", "</section_title>"

#: Tag tokens of the ToTTo-style variant (title tags differ, rest is shared).
TOTTO_TAGS = frozenset(
    {PAGE_TITLE, PAGE_TITLE_END, SECTION_TITLE, SECTION_TITLE_END,
     "<table>", "</table>", "<cell>", "</cell>",
     "<col_header>", "</col_header>", "<row_header>", "</row_header>"}
)


def linearize_totto_variant(table: VirtualTable) -> LinearizedText:
    """Highlighted-cell serialization with ToTTo's title tag spellings.

    Identical to the unified highlighted output except that titles are
    wrapped in ``<page_title>`` / ``<section_title>``.

    Raises:
        NoHighlights: if the table has no highlighted cells.
    """
    text = _highlighted_parts(
        table, (PAGE_TITLE, PAGE_TITLE_END), (SECTION_TITLE, SECTION_TITLE_END)
    )
    return LinearizedText(text, Scheme.TOTTO, Orientation.HIGHLIGHTED)


def linearize_unifiedskg_kg(ts: TripleSet) -> LinearizedText:
    """Concatenate triples as ``head : relation : tail`` joined by `` | ``.

    Relations are lowercased with underscores mapped to spaces ("FIELD_GOALS"
    becomes "field goals"); heads and tails pass through verbatim. The
    underscore mapping is re-collapsed to single spaces so the output keeps
    the single-space rule even for runs of underscores. There is no escaping:
    node text containing the " : " or " | " separators is emitted as-is and
    cannot be split back unambiguously.
    """
    rendered = []
    for t in ts.triples:
        relation = normalize_ws(t.relation.lower().replace("_", " "))
        rendered.append(" ".join(filter(None, [t.head, ":", relation, ":", t.tail])))
    return LinearizedText(" | ".join(rendered), Scheme.UNIFIEDSKG, Orientation.NOT_APPLICABLE)


def linearize_logicnlg(
    table: VirtualTable,
    *,
    clause_joiner: str = " , ",
    sentence_terminator: str = " .",
) -> LinearizedText:
    """Render a table as LogicNLG-style row sentences.

    Output is "Given the table title of {title}. " followed by one sentence
    per row: "In row {i} , the {header} is {value} , ... .". The clause
    joiner and sentence terminator are knobs with those strings as the
    defaults. Tables without any title skip the preamble sentence. Row
    headers have no slot in this template and are not emitted.

    Raises:
        MissingHeader: if any cell does not have exactly one column header.
    """
    sentences: list[str] = []
    titles = ", ".join(filter(None, [table.title, table.sub_title]))
    if titles:
        sentences.append(f"Given the table title of {titles}.")
    for i, row in enumerate(table.rows, start=1):
        clauses = [f"In row {i}"]
        for j, cell in enumerate(row):
            if len(cell.col_headers) != 1:
                raise MissingHeader(
                    f"cell ({i - 1}, {j}) has {len(cell.col_headers)} column headers, expected 1"
                )
            clauses.append(" ".join(filter(None, ["the", cell.col_headers[0], "is", cell.value])))
        sentences.append(clause_joiner.join(clauses) + sentence_terminator)
    return LinearizedText(" ".join(sentences), Scheme.LOGICNLG, Orientation.ROW)


def render_mr(mrs: MrList) -> str:
    """Render pairs back to canonical ``attr[value], attr[value]`` text."""
    return ", ".join(f"{attr}[{value}]" for attr, value in mrs.pairs)


def linearize_e2e_concat(mrs: MrList) -> LinearizedText:
    """Concatenate MR pairs verbatim, the E2E dataset's native format."""
    return LinearizedText(render_mr(mrs), Scheme.E2E_CONCAT, Orientation.NOT_APPLICABLE)
