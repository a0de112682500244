"""Pajek-style network/partition/vector files plus plain edge lists.

Dialect (pinned by the golden files): a ``*Vertices n`` header, optional
vertex lines ``id "label"``, then ``*Edges`` and/or ``*Arcs`` sections
with 1-based endpoint pairs and an optional integer weight column.
Blank lines and ``%`` comments are skipped on input and never written;
written files list members in id order and end with a newline.  External
ids are 1-based, internal vertex ids 0-based.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import PajekParseError
from .graphs import (DirectedGraph, UndirectedGraph, build_undirected,
                     expand_mixed)
from .networks import WeightedSubnetwork
from .partitions import MemberPartition, VertexPartition

_LABEL_RE = re.compile(r'^(\d+)(?:\s+"([^"]*)")?\s*')


def _read_lines(source):
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return text.splitlines()


def read_network(source, format: str = "auto", directed: bool | None = None,
                 strict: bool = False):
    """Read a network file into an UndirectedGraph or DirectedGraph.

    format: "pajek", "edgelist", or "auto" (pajek iff the first
    meaningful line starts with '*').  directed forces the result type;
    None infers it (pajek: arcs section present; edgelist: undirected).
    """
    lines = _read_lines(source)
    if format == "auto":
        format = "edgelist"
        for line in lines:
            stripped = line.strip()
            if stripped and not stripped.startswith(("%", "#")):
                if stripped.startswith("*"):
                    format = "pajek"
                break
    if format == "pajek":
        return _parse_pajek(lines, directed, strict)
    if format == "edgelist":
        return _parse_edgelist(lines, directed, strict)
    raise ValueError(f"unknown format {format!r}")


def _parse_pajek(lines, directed, strict):
    n = None
    labels: list[str | None] = []
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    section = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        low = line.lower()
        if low.startswith("*"):
            if low.startswith("*vertices"):
                parts = line.split()
                if len(parts) < 2:
                    raise PajekParseError(f"line {lineno}: *Vertices without a count")
                try:
                    n = int(parts[1])
                except ValueError:
                    raise PajekParseError(f"line {lineno}: bad vertex count {parts[1]!r}")
                if n < 0:
                    raise PajekParseError(f"line {lineno}: negative vertex count")
                labels = [None] * n
                section = "vertices"
            elif low.startswith("*edges"):
                section = "edges"
            elif low.startswith("*arcs"):
                section = "arcs"
            else:
                raise PajekParseError(f"line {lineno}: unknown section {line!r}")
            if section != "vertices" and n is None:
                raise PajekParseError(f"line {lineno}: section before *Vertices")
            continue
        if section == "vertices":
            match = _LABEL_RE.match(line)
            if not match:
                raise PajekParseError(f"line {lineno}: bad vertex line {line!r}")
            vid = int(match.group(1))
            if not 1 <= vid <= n:
                raise PajekParseError(f"line {lineno}: vertex id {vid} out of 1..{n}")
            if match.group(2) is not None:
                labels[vid - 1] = match.group(2)
        elif section in ("edges", "arcs"):
            parts = line.split()
            if len(parts) < 2:
                raise PajekParseError(f"line {lineno}: expected two endpoints")
            try:
                u = int(parts[0])
                v = int(parts[1])
            except ValueError:
                raise PajekParseError(f"line {lineno}: bad endpoints {line!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise PajekParseError(f"line {lineno}: endpoint out of 1..{n}")
            (edges if section == "edges" else arcs).append((u - 1, v - 1))
        else:
            raise PajekParseError(f"line {lineno}: data before any section")
    if n is None:
        raise PajekParseError("missing *Vertices header")
    has_labels = any(x is not None for x in labels)
    label_tuple = tuple(x if x is not None else "" for x in labels) if has_labels else None
    if directed is False and arcs:
        raise PajekParseError("file has an *Arcs section but an undirected "
                              "graph was requested")
    if arcs or directed is True:
        return expand_mixed(n, edges, arcs, strict=strict, labels=label_tuple)
    return build_undirected(n, edges, strict=strict, labels=label_tuple)


def _parse_edgelist(lines, directed, strict):
    pairs = []
    top = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise PajekParseError(f"line {lineno}: expected two endpoints")
        try:
            u = int(parts[0])
            v = int(parts[1])
        except ValueError:
            raise PajekParseError(f"line {lineno}: bad endpoints {line!r}")
        if u < 1 or v < 1:
            raise PajekParseError(f"line {lineno}: edge-list ids are 1-based")
        pairs.append((u - 1, v - 1))
        top = max(top, u, v)
    if directed:
        return expand_mixed(top, [], pairs, strict=strict)
    return build_undirected(top, pairs, strict=strict)


def _vertex_block(n, labels):
    lines = [f"*Vertices {n}"]
    if labels is not None:
        for i, label in enumerate(labels, 1):
            lines.append(f'{i} "{label}"')
    return lines


def network_text(obj) -> str:
    """Canonical file text for a graph or weighted subnetwork."""
    if isinstance(obj, WeightedSubnetwork):
        base = obj.base
        lines = _vertex_block(base.n, base.labels)
        lines.append("*Arcs" if obj.directed else "*Edges")
        for (u, v), w in zip(obj.members, obj.weights):
            lines.append(f"{u + 1} {v + 1} {w}")
    elif isinstance(obj, UndirectedGraph):
        lines = _vertex_block(obj.n, obj.labels)
        lines.append("*Edges")
        lines.extend(f"{u + 1} {v + 1}" for u, v in obj.edges)
    elif isinstance(obj, DirectedGraph):
        lines = _vertex_block(obj.n, obj.labels)
        lines.append("*Arcs")
        lines.extend(f"{u + 1} {v + 1}" for u, v in obj.arcs)
    else:
        raise TypeError(f"cannot write {type(obj).__name__} as a network")
    return "\n".join(lines) + "\n"


def write_network(obj, path) -> None:
    Path(path).write_text(network_text(obj), encoding="utf-8")


def partition_text(partition) -> str:
    """``.clu`` text: element count header, one 1-based class id per line."""
    if isinstance(partition, VertexPartition):
        values = partition.labels
    elif isinstance(partition, MemberPartition):
        values = partition.labels
    else:
        values = tuple(partition)
    lines = [f"*Vertices {len(values)}"]
    lines.extend(str(v) for v in values)
    return "\n".join(lines) + "\n"


def write_partition(partition, path) -> None:
    Path(path).write_text(partition_text(partition), encoding="utf-8")


def read_partition(source) -> list[int]:
    lines = _read_lines(source)
    values = []
    expected = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.lower().startswith("*vertices"):
            expected = int(line.split()[1])
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise PajekParseError(f"line {lineno}: bad class id {line!r}")
    if expected is not None and expected != len(values):
        raise PajekParseError(
            f"header says {expected} values, found {len(values)}"
        )
    return values


def vector_text(values) -> str:
    """``.vec`` text: element count header, one numeric value per line."""
    values = list(values)
    lines = [f"*Vertices {len(values)}"]
    lines.extend(str(v) for v in values)
    return "\n".join(lines) + "\n"


def write_vector(values, path) -> None:
    Path(path).write_text(vector_text(values), encoding="utf-8")
