"""Error taxonomy shared by all converters, serializers and the CLI.

Every error carries a stable machine-readable ``code`` (the class name) so
batch tooling and foreign-language bindings can map failures 1:1.
"""

from __future__ import annotations


class VirtabError(Exception):
    """Base class for all toolkit errors.

    ``record_id`` is set by batch conversion when the failure belongs to a
    specific input record.
    """

    record_id: str | None = None

    @property
    def code(self) -> str:
        return type(self).__name__


# --- virtual-table construction ---------------------------------------------

class EmptyTable(VirtabError):
    """A table grid has no rows, or contains an empty row."""


class HighlightOutOfBounds(VirtabError):
    """A highlight coordinate does not index an existing cell."""

    def __init__(self, pair: tuple[int, int], message: str):
        super().__init__(message)
        self.pair = pair


class EmptyHeader(VirtabError):
    """A column/row header is empty after whitespace normalization."""


# --- knowledge-graph adapter -------------------------------------------------

class MalformedTriple(VirtabError):
    """A triple record has the wrong arity or an empty component."""

    def __init__(self, index: int, message: str):
        super().__init__(f"triple {index}: {message}")
        self.index = index


# --- meaning-representation adapter -------------------------------------------

class MrSyntaxError(VirtabError):
    """Attribute[Value] text violates the MR grammar.

    ``offset`` is the byte offset (UTF-8) of the offending position.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


# --- serialization -------------------------------------------------------------

class NoHighlights(VirtabError):
    """Highlighted-cell serialization requested for a table without highlights."""


class NotRectangular(VirtabError):
    """Column-wise serialization requires all rows to have equal length."""


class InconsistentColumnHeaders(VirtabError):
    """Cells of one column disagree on, or lack, a single column header."""


class MissingHeader(VirtabError):
    """A template serialization needs exactly one column header per cell."""


# --- tagged-format parsing ------------------------------------------------------

class UnbalancedTag(VirtabError):
    """An open tag is never closed, or a close tag does not match.

    ``offset`` is the index of the offending token (token count for EOF).
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (token {offset})")
        self.offset = offset


class UnexpectedToken(VirtabError):
    """A token appears where the tagged grammar does not allow it."""

    def __init__(self, token: str, offset: int, message: str):
        super().__init__(f"{message}: {token!r} (token {offset})")
        self.token = token
        self.offset = offset


class EmptyDocument(VirtabError):
    """The tagged-format input contains no tokens."""


# --- batch I/O -------------------------------------------------------------------

class IoError(VirtabError):
    """A file could not be opened or read."""


class JsonError(VirtabError):
    """A line of a JSONL file is not valid JSON."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SchemaError(VirtabError):
    """A JSONL record does not match the canonical record schema."""

    def __init__(self, line: int | None, field: str, message: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{field}: {message}")
        self.line = line
        self.field = field


class IncompatibleScheme(VirtabError):
    """The requested scheme/orientation cannot apply to the record's form."""


#: Codes of every error a conversion pipeline can surface, for 1:1 mapping in
#: bindings. Order is stable and part of the public contract.
ERROR_CODES: tuple[str, ...] = (
    "EmptyTable",
    "HighlightOutOfBounds",
    "EmptyHeader",
    "MalformedTriple",
    "MrSyntaxError",
    "NoHighlights",
    "NotRectangular",
    "InconsistentColumnHeaders",
    "MissingHeader",
    "UnbalancedTag",
    "UnexpectedToken",
    "EmptyDocument",
    "IoError",
    "JsonError",
    "SchemaError",
    "IncompatibleScheme",
)
