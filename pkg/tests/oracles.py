"""Independent oracles the test suite checks the library against.

Everything here is deliberately re-derived from first principles (adjacency
DFS, a token stack, plain string building) and must not call into the
library code it is used to verify.
"""

from __future__ import annotations

from collections import defaultdict

FlatTriple = tuple[str, str, str]


def dfs_components(triples: list[FlatTriple]) -> list[list[FlatTriple]]:
    """Partition triples into connected components by exhaustive DFS.

    Vertices are node strings (heads and tails, exact equality), edges are
    triples. Triples keep input order within a component; components are
    ordered by the index of their earliest triple.
    """
    adjacency: dict[str, set[str]] = defaultdict(set)
    for head, _, tail in triples:
        adjacency[head].add(tail)
        adjacency[tail].add(head)

    component_of: dict[str, int] = {}
    next_id = 0
    for head, _, tail in triples:
        for start in (head, tail):
            if start in component_of:
                continue
            stack = [start]
            component_of[start] = next_id
            while stack:
                node = stack.pop()
                for neighbor in adjacency[node]:
                    if neighbor not in component_of:
                        component_of[neighbor] = next_id
                        stack.append(neighbor)
            next_id += 1

    grouped: dict[int, list[FlatTriple]] = defaultdict(list)
    order: list[int] = []
    for triple in triples:
        cid = component_of[triple[0]]
        if cid not in grouped:
            order.append(cid)
        grouped[cid].append(triple)
    return [grouped[cid] for cid in order]


def tag_balance_errors(text: str, tags: frozenset[str]) -> list[str]:
    """Check that every open tag has a matching, properly nested close tag."""
    errors = []
    stack: list[str] = []
    for token in text.split(" "):
        if token not in tags:
            continue
        if token.startswith("</"):
            expected = "<" + token[2:]
            if not stack:
                errors.append(f"stray {token}")
            elif stack[-1] != expected:
                errors.append(f"{token} closes {stack[-1]}")
            else:
                stack.pop()
        else:
            stack.append(token)
    errors.extend(f"unclosed {tag}" for tag in stack)
    return errors


def is_single_spaced(text: str) -> bool:
    """True iff no leading/trailing whitespace and no double spaces."""
    return text == text.strip() and "  " not in text


def render_mr_pairs(pairs: list[tuple[str, str]]) -> str:
    """Reference attr[value] rendering used to close the MR round trip."""
    return ", ".join(a + "[" + v + "]" for a, v in pairs)
