import random

import pytest
from hypothesis import given, settings

import gen
from virtab import (
    Cell,
    LinearizedText,
    Orientation,
    Scheme,
    VirtualTable,
    make_cell,
    make_virtual_table,
    normalize_ws,
    validate,
)
from virtab.errors import EmptyHeader, EmptyTable, HighlightOutOfBounds


def test_normalize_ws_collapses_runs():
    assert normalize_ws("  a \t b\n\nc  ") == "a b c"
    assert normalize_ws("\n") == ""


def test_filmography_table_is_canonical(filmography):
    assert filmography.title == "Alma Jodorowsky"
    assert filmography.sub_title == "Filmography"
    assert filmography.highlights == ((1, 0), (1, 1), (1, 2))
    assert validate(filmography) == []


def test_minimal_table():
    t = make_virtual_table(rows=[["x"]])
    assert t.title is None and t.sub_title is None
    assert t.rows == ((Cell("x"),),)
    assert t.highlights == ()


def test_highlights_sorted_and_deduplicated():
    t = make_virtual_table(rows=[["a", "b", "c"], ["d", "e", "f"]],
                           highlights=[(1, 2), (1, 0), (1, 1), (1, 0)])
    assert t.highlights == ((1, 0), (1, 1), (1, 2))


def test_values_and_titles_normalized():
    t = make_virtual_table(
        title="  Alma\nJodorowsky ",
        sub_title="   ",
        rows=[[make_cell(" a\tb ", ["  Year  "])]],
    )
    assert t.title == "Alma Jodorowsky"
    assert t.sub_title is None  # whitespace-only counts as absent
    assert t.rows[0][0] == Cell("a b", ("Year",))


def test_empty_grid_rejected():
    with pytest.raises(EmptyTable):
        make_virtual_table(rows=[])
    with pytest.raises(EmptyTable):
        make_virtual_table(rows=[["a"], []])


def test_highlight_out_of_bounds_reports_pair():
    with pytest.raises(HighlightOutOfBounds) as exc:
        make_virtual_table(rows=[["a"], ["b"], ["c"]], highlights=[(5, 0)])
    assert exc.value.pair == (5, 0)
    with pytest.raises(HighlightOutOfBounds):
        make_virtual_table(rows=[["a"]], highlights=[(0, -1)])


def test_ragged_rows_allowed_with_per_row_bounds():
    t = make_virtual_table(rows=[["a"], ["b", "c"]], highlights=[(1, 1)])
    assert t.highlights == ((1, 1),)
    with pytest.raises(HighlightOutOfBounds):
        make_virtual_table(rows=[["a"], ["b", "c"]], highlights=[(0, 1)])


def test_empty_header_rejected():
    with pytest.raises(EmptyHeader):
        make_cell("x", col_headers=["  "])
    with pytest.raises(EmptyHeader):
        make_virtual_table(rows=[[Cell("x", ("", ))]])


def test_validate_reports_out_of_bounds_highlight():
    t = VirtualTable(rows=((Cell("a"),),), highlights=((5, 0),))
    codes = [v.invariant for v in validate(t)]
    assert codes == ["HighlightOutOfBounds"]


def test_validate_reports_injected_newline():
    t = VirtualTable(rows=((Cell("a\nb"),),))
    codes = [v.invariant for v in validate(t)]
    assert codes == ["IllegalCellValue"]


def test_validate_reports_unsorted_or_duplicate_highlights():
    t = VirtualTable(rows=((Cell("a"), Cell("b")),), highlights=((0, 1), (0, 0)))
    assert "HighlightNotCanonical" in [v.invariant for v in validate(t)]
    t = VirtualTable(rows=((Cell("a"),),), highlights=((0, 0), (0, 0)))
    assert "HighlightNotCanonical" in [v.invariant for v in validate(t)]


def test_validate_reports_empty_row_and_empty_header():
    t = VirtualTable(rows=((Cell("a"),), ()))
    assert "EmptyTable" in [v.invariant for v in validate(t)]
    t = VirtualTable(rows=((Cell("a", ("", )),),))
    assert "EmptyHeader" in [v.invariant for v in validate(t)]


def test_linearized_text_enforces_single_spacing():
    LinearizedText("a b", Scheme.UNIFIED, Orientation.ROW)
    with pytest.raises(ValueError):
        LinearizedText("a  b", Scheme.UNIFIED, Orientation.ROW)
    with pytest.raises(ValueError):
        LinearizedText(" a b", Scheme.UNIFIED, Orientation.ROW)


@given(gen.tables_st())
def test_construction_is_idempotent(t):
    rebuilt = make_virtual_table(t.title, t.sub_title, t.rows, t.highlights)
    assert rebuilt == t


@given(gen.tables_st())
@settings(max_examples=200)
def test_factory_output_always_validates(t):
    assert validate(t) == []


def test_factory_output_validates_at_scale():
    # the invariant is contractually checked over at least 1000 random grids
    rng = random.Random(20240811)
    for _ in range(1000):
        assert validate(gen.table(rng)) == []
