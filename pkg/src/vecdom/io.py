"""Text formats: DIMACS-style graphs, demand lists, vertex sets.

External ids are 1-based; everything internal is 0-based.  The translation
happens here and nowhere else.  Writers emit the canonical form their
parser accepts, so write(parse(x)) canonicalizes and parse(write(g)) == g.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import (
    CountMismatchError,
    DuplicateVertexError,
    MalformedError,
    NegativeDemandError,
    OutOfRangeError,
)
from .graph import Graph, build_graph

__all__ = [
    "parse_graph",
    "write_graph",
    "parse_demands",
    "write_demands",
    "parse_vertex_set",
    "write_vertex_set",
    "parse_alpha",
]


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        lines.append((number, line))
    return lines


def parse_graph(text: str) -> Graph:
    """Read a graph: comments "c ...", one "p edge <n> <m>", then e-lines.

    Raises:
        MalformedError: missing or repeated header, or an unreadable line.
        CountMismatchError: the header's edge count disagrees with the
            number of e-lines.
        OutOfRangeError, SelfLoopError, DuplicateEdgeError: bad edges.
    """
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for number, line in _content_lines(text):
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise MalformedError(f"line {number}: second header")
            if len(fields) != 4 or fields[1] != "edge":
                raise MalformedError(f"line {number}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise MalformedError(f"line {number}: non-integer header field")
            if n < 0 or declared_m < 0:
                raise MalformedError(f"line {number}: negative header field")
        elif fields[0] == "e":
            if n is None:
                raise MalformedError(f"line {number}: edge before the header")
            if len(fields) != 3:
                raise MalformedError(f"line {number}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise MalformedError(f"line {number}: non-integer endpoint")
            edges.append((u - 1, v - 1))
        else:
            raise MalformedError(f"line {number}: unknown line type {fields[0]!r}")
    if n is None:
        raise MalformedError("missing 'p edge <n> <m>' header")
    if len(edges) != declared_m:
        raise CountMismatchError(
            f"header declares {declared_m} edges, found {len(edges)}"
        )
    return build_graph(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_demands(text: str, g: Graph) -> tuple[int, ...]:
    """Read "<v> <k>" lines; vertices not mentioned default to demand 0.

    Raises:
        MalformedError: an unreadable line.
        OutOfRangeError: a vertex id outside 1..n.
        NegativeDemandError: a negative demand.
        DuplicateVertexError: the same vertex appears twice.
    """
    demands = [0] * g.n
    seen: set[int] = set()
    for number, line in _content_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise MalformedError(f"line {number}: expected '<vertex> <demand>'")
        try:
            v, k = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedError(f"line {number}: non-integer field")
        if not 1 <= v <= g.n:
            raise OutOfRangeError(f"line {number}: vertex {v} not in 1..{g.n}")
        if k < 0:
            raise NegativeDemandError(f"line {number}: demand {k} is negative")
        if v - 1 in seen:
            raise DuplicateVertexError(f"line {number}: vertex {v} repeated")
        seen.add(v - 1)
        demands[v - 1] = k
    return tuple(demands)


def write_demands(demands: Sequence[int]) -> str:
    lines = [f"{v + 1} {k}" for v, k in enumerate(demands) if k != 0]
    return "\n".join(lines) + "\n" if lines else ""


def parse_vertex_set(text: str, g: Graph) -> frozenset[int]:
    """Read whitespace-separated 1-based vertex ids.

    Raises:
        MalformedError, OutOfRangeError, DuplicateVertexError.
    """
    members: set[int] = set()
    for number, line in _content_lines(text):
        for field in line.split():
            try:
                v = int(field)
            except ValueError:
                raise MalformedError(f"line {number}: non-integer id {field!r}")
            if not 1 <= v <= g.n:
                raise OutOfRangeError(f"line {number}: vertex {v} not in 1..{g.n}")
            if v - 1 in members:
                raise DuplicateVertexError(f"line {number}: vertex {v} repeated")
            members.add(v - 1)
    return frozenset(members)


def write_vertex_set(members: frozenset[int] | set[int]) -> str:
    lines = [str(v + 1) for v in sorted(members)]
    return "\n".join(lines) + "\n" if lines else ""


_ALPHA_FORM = re.compile(r"^([0-9]+)/([0-9]+)$")


def parse_alpha(text: str) -> Fraction:
    """Accept exactly "p/q"; anything else, decimals included, is rejected."""
    match = _ALPHA_FORM.match(text.strip())
    if match is None:
        raise MalformedError(
            f"alpha must be written as a fraction 'p/q', got {text!r}"
        )
    p, q = int(match.group(1)), int(match.group(2))
    if q == 0:
        raise MalformedError("alpha denominator is zero")
    return Fraction(p, q)
