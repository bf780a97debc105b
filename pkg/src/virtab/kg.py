"""Knowledge-graph triples to virtual tables.

A triple set is split into connected components (shared node strings connect
triples), and each component becomes a one-row virtual table: the tail of
each triple is a cell value with the relation as its column header, and
nodes that never occur as a tail lead the row as header-less cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import MalformedTriple
from .ir import VirtualTable, make_cell, make_virtual_table, normalize_ws


@dataclass(frozen=True)
class Triple:
    """One (head, relation, tail) assertion."""

    head: str
    relation: str
    tail: str


@dataclass(frozen=True)
class TripleSet:
    """An ordered, non-empty collection of triples (input order preserved)."""

    triples: tuple[Triple, ...]


def parse_triples(records: Sequence[Sequence[str]]) -> TripleSet:
    """Build a normalized triple set from flat (head, relation, tail) records.

    Raises:
        MalformedTriple: wrong arity, non-string component, or a component
            that is empty after whitespace normalization; carries the index
            of the offending record.
    """
    if not records:
        raise MalformedTriple(0, "empty triple set")
    triples = []
    for i, record in enumerate(records):
        if len(record) != 3:
            raise MalformedTriple(i, f"expected 3 components, got {len(record)}")
        parts = []
        for component in record:
            if not isinstance(component, str):
                raise MalformedTriple(i, f"component is not a string: {component!r}")
            parts.append(normalize_ws(component))
        if any(p == "" for p in parts):
            raise MalformedTriple(i, "empty component")
        triples.append(Triple(*parts))
    return TripleSet(tuple(triples))


class _UnionFind:
    """Disjoint sets over node strings, with path compression."""

    def __init__(self) -> None:
        self._parent: dict[str, str] = {}

    def find(self, node: str) -> str:
        parent = self._parent.setdefault(node, node)
        root = node
        while parent != root:
            root = parent
            parent = self._parent[root]
        while self._parent[node] != root:
            self._parent[node], node = root, self._parent[node]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[rb] = ra


def connected_components(ts: TripleSet) -> list[TripleSet]:
    """Partition a triple set into connected components.

    Nodes are compared by exact string equality. Triples keep their input
    order within a component, and components are ordered by the input index
    of their earliest triple, so output is stable across runs.
    """
    uf = _UnionFind()
    for t in ts.triples:
        uf.union(t.head, t.tail)

    ordered_roots: list[str] = []
    grouped: dict[str, list[Triple]] = {}
    for t in ts.triples:
        root = uf.find(t.head)
        if root not in grouped:
            grouped[root] = []
            ordered_roots.append(root)
        grouped[root].append(t)
    return [TripleSet(tuple(grouped[root])) for root in ordered_roots]


def triples_to_virtual_table(component: TripleSet) -> VirtualTable:
    """Convert one connected component into a one-row virtual table.

    Nodes that never occur as a tail get a header-less cell each, first, in
    order of first appearance; then every triple contributes a cell whose
    value is the tail and whose single column header is the relation,
    verbatim. Duplicate triples yield duplicate cells; dropping data silently
    would be worse.
    """
    tails = {t.tail for t in component.triples}
    lead: list[str] = []
    for t in component.triples:
        if t.head not in tails and t.head not in lead:
            lead.append(t.head)

    row: list = [make_cell(node) for node in lead]
    row.extend(make_cell(t.tail, col_headers=(t.relation,)) for t in component.triples)
    return make_virtual_table(rows=[row])


def kg_to_tables(ts: TripleSet) -> list[VirtualTable]:
    """Convert a triple set into one virtual table per connected component."""
    return [triples_to_virtual_table(c) for c in connected_components(ts)]
