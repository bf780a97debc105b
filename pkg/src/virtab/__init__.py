"""virtab: heterogeneous structured data to virtual tables to token strings.

Tables with highlighted cells, knowledge-graph triple sets and textual
meaning representations all convert to one grid-shaped intermediate form,
which serializes deterministically under a unified tagged scheme (in
highlighted, row or column orientation) or under four dataset-native legacy
schemes.
"""

from . import errors
from .dataset_io import (
    OutputRecord,
    ReadError,
    Record,
    collect_stats,
    convert_record,
    read_records,
    record_from_obj,
    table_from_payload,
    table_to_payload,
)
from .ir import (
    Cell,
    LinearizedText,
    Orientation,
    Scheme,
    Violation,
    VirtualTable,
    make_cell,
    make_virtual_table,
    normalize_ws,
    validate,
)
from .kg import (
    Triple,
    TripleSet,
    connected_components,
    kg_to_tables,
    parse_triples,
    triples_to_virtual_table,
)
from .legacy import (
    linearize_e2e_concat,
    linearize_logicnlg,
    linearize_totto_variant,
    linearize_unifiedskg_kg,
    render_mr,
)
from .mr import MrList, mr_to_virtual_table, parse_mr
from .unified import (
    ambiguous_value_warnings,
    linearize_columns,
    linearize_highlighted,
    linearize_rows,
    parse_unified,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "LinearizedText",
    "MrList",
    "Orientation",
    "OutputRecord",
    "ReadError",
    "Record",
    "Scheme",
    "Triple",
    "TripleSet",
    "Violation",
    "VirtualTable",
    "ambiguous_value_warnings",
    "collect_stats",
    "connected_components",
    "convert_record",
    "errors",
    "kg_to_tables",
    "linearize_columns",
    "linearize_e2e_concat",
    "linearize_highlighted",
    "linearize_logicnlg",
    "linearize_rows",
    "linearize_totto_variant",
    "linearize_unifiedskg_kg",
    "make_cell",
    "make_virtual_table",
    "mr_to_virtual_table",
    "normalize_ws",
    "parse_mr",
    "parse_triples",
    "parse_unified",
    "read_records",
    "record_from_obj",
    "render_mr",
    "table_from_payload",
    "table_to_payload",
    "triples_to_virtual_table",
    "validate",
]
