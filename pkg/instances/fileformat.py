"""
Plain-text instance files.

    c <free text>                          comment, ignored
    p bgctp <n> <m> <root>                 header, exactly once
    e <u> <v> <cable_cost> <trench_cost>   one line per edge, u < v

``write_instance`` emits edges in ascending (u, v) order, single spaces and
``\\n`` line endings, so equal graphs always serialize to equal bytes.
"""

from typing import Iterable

from graphs.core import Graph, validate_graph

from .exceptions import InstanceParseError

HEADER_TAG = 'bgctp'


def _integers(tokens: list[str], line_number: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise InstanceParseError(f"expected integers, got {' '.join(tokens)!r}", line_number)


def read_instance(text: str) -> Graph:
    header = None
    header_line = 0
    raw_edges = []
    last_line = 0

    for line_number, line in enumerate(text.split('\n'), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        last_line = line_number
        kind, fields = tokens[0], tokens[1:]
        if kind == 'p':
            if header is not None:
                raise InstanceParseError(f"second header (first on line {header_line})", line_number)
            if len(fields) != 4 or fields[0] != HEADER_TAG:
                raise InstanceParseError(f"header must read 'p {HEADER_TAG} <n> <m> <root>'", line_number)
            header = _integers(fields[1:], line_number)
            header_line = line_number
        elif kind == 'e':
            if header is None:
                raise InstanceParseError("edge line before the header", line_number)
            if len(fields) != 4:
                raise InstanceParseError("edge line must read 'e <u> <v> <cable_cost> <trench_cost>'", line_number)
            raw_edges.append(tuple(_integers(fields, line_number)))
        else:
            raise InstanceParseError(f"unknown record type {kind!r}", line_number)

    if header is None:
        raise InstanceParseError("missing 'p' header", max(last_line, 1))
    n, m, root = header
    if len(raw_edges) != m:
        raise InstanceParseError(f"header announces {m} edges, found {len(raw_edges)}", last_line)
    return validate_graph(raw_edges, n=n, root=root)


def write_instance(graph: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p {HEADER_TAG} {graph.n} {graph.m} {graph.root}")
    for edge in sorted(graph.edges, key=lambda e: (e.u, e.v)):
        lines.append(f"e {edge.u} {edge.v} {edge.cable_cost} {edge.trench_cost}")
    return '\n'.join(lines) + '\n'
