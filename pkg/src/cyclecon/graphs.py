"""Simple graph representations and the classical connectivity relations.

Vertices are dense 0-based ids; the I/O layer maps 1-based external
labels.  Neighbor rows are kept sorted so common-neighbor queries run as
linear merges, and edges/arcs get stable ids from their lexicographic
order.  Graphs are immutable after construction.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import GraphConstructionError
from .partitions import VertexPartition


def _check_endpoint(x, n: int):
    x = int(x)
    if not 0 <= x < n:
        raise GraphConstructionError(f"endpoint {x} out of range [0, {n})")
    return x


def _clean_pairs(n, pairs, strict, kind):
    """Validate, normalize and dedupe vertex pairs; returns a sorted list."""
    seen = set()
    loops = 0
    dupes = 0
    for pair in pairs:
        u, v = pair
        u = _check_endpoint(u, n)
        v = _check_endpoint(v, n)
        if u == v:
            if strict:
                raise GraphConstructionError(f"loop at vertex {u}")
            loops += 1
            continue
        if kind == "edge" and u > v:
            u, v = v, u
        if (u, v) in seen:
            if strict:
                raise GraphConstructionError(f"duplicate {kind} ({u}, {v})")
            dupes += 1
            continue
        seen.add((u, v))
    if loops or dupes:
        warnings.warn(
            f"dropped {loops} loop(s) and {dupes} duplicate {kind}(s)",
            stacklevel=3,
        )
    return sorted(seen)


def _csr_from_pairs(n, heads, tails, ids):
    """CSR with rows sorted by neighbor id; returns (indptr, indices, row_ids)."""
    order = np.lexsort((tails, heads))
    indices = tails[order]
    row_ids = ids[order]
    counts = np.bincount(heads, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    for arr in (indptr, indices, row_ids):
        arr.setflags(write=False)
    return indptr, indices, row_ids


class UndirectedGraph:
    """Simple undirected graph with sorted adjacency and stable edge ids."""

    def __init__(self, n: int, edges: Sequence[tuple[int, int]],
                 labels: tuple[str, ...] | None = None):
        self.n = int(n)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.labels = labels
        m = len(self.edges)
        eu = np.fromiter((e[0] for e in self.edges), dtype=np.int64, count=m)
        ev = np.fromiter((e[1] for e in self.edges), dtype=np.int64, count=m)
        self.edge_u = eu
        self.edge_v = ev
        heads = np.concatenate([eu, ev])
        tails = np.concatenate([ev, eu])
        ids = np.concatenate([np.arange(m, dtype=np.int64)] * 2)
        self.indptr, self.indices, self.csr_eids = _csr_from_pairs(
            self.n, heads, tails, ids
        )
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._cache = {}
        for arr in (eu, ev):
            arr.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def max_degree(self) -> int:
        return int(np.max(np.diff(self.indptr))) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._edge_index[(u, v)]

    def subgraph_with_edges(self, members) -> "UndirectedGraph":
        """Same vertex set, edge set restricted to members."""
        return UndirectedGraph(self.n, sorted(members), labels=self.labels)

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


class DirectedGraph:
    """Simple loop-free digraph with sorted in/out adjacency and arc ids."""

    def __init__(self, n: int, arcs: Sequence[tuple[int, int]],
                 labels: tuple[str, ...] | None = None):
        self.n = int(n)
        self.arcs = tuple((int(u), int(v)) for u, v in arcs)
        self.labels = labels
        na = len(self.arcs)
        au = np.fromiter((a[0] for a in self.arcs), dtype=np.int64, count=na)
        av = np.fromiter((a[1] for a in self.arcs), dtype=np.int64, count=na)
        self.arc_u = au
        self.arc_v = av
        ids = np.arange(na, dtype=np.int64)
        self.out_indptr, self.out_indices, self.out_aids = _csr_from_pairs(
            self.n, au, av, ids
        )
        self.in_indptr, self.in_indices, self.in_aids = _csr_from_pairs(
            self.n, av, au, ids
        )
        self._arc_index = {a: i for i, a in enumerate(self.arcs)}
        self._cache = {}
        for arr in (au, av):
            arr.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self, u: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[u]:self.out_indptr[u + 1]]

    def predecessors(self, u: int) -> np.ndarray:
        return self.in_indices[self.in_indptr[u]:self.in_indptr[u + 1]]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_index

    def arc_id(self, u: int, v: int) -> int:
        return self._arc_index[(u, v)]

    def subgraph_with_arcs(self, members) -> "DirectedGraph":
        return DirectedGraph(self.n, sorted(members), labels=self.labels)

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Distinct undirected edges {u,v} with at least one arc between u and v."""
        return sorted({(u, v) if u < v else (v, u) for u, v in self.arcs})

    def underlying_graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, self.underlying_edges(), labels=self.labels)

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


def build_undirected(n: int, pairs: Iterable[tuple[int, int]],
                     strict: bool = False,
                     labels: tuple[str, ...] | None = None) -> UndirectedGraph:
    """Build a simple undirected graph.

    Loops and duplicate pairs are dropped with a warning by default and
    rejected when strict=True.
    """
    if n < 0:
        raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
    return UndirectedGraph(n, _clean_pairs(n, pairs, strict, "edge"), labels=labels)


def build_directed(n: int, arcs: Iterable[tuple[int, int]],
                   strict: bool = False,
                   labels: tuple[str, ...] | None = None) -> DirectedGraph:
    """Build a simple loop-free digraph; same strictness rules as edges."""
    if n < 0:
        raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
    return DirectedGraph(n, _clean_pairs(n, arcs, strict, "arc"), labels=labels)


def expand_mixed(n: int, edges: Iterable[tuple[int, int]],
                 arcs: Iterable[tuple[int, int]],
                 strict: bool = False,
                 labels: tuple[str, ...] | None = None) -> DirectedGraph:
    """Digraph from a mixed graph: each edge becomes a pair of opposite arcs.

    An arc that duplicates one direction of an edge is collapsed silently;
    loops and duplicates within each section follow the strictness rules.
    """
    if n < 0:
        raise GraphConstructionError(f"vertex count must be >= 0, got {n}")
    cleaned_edges = _clean_pairs(n, edges, strict, "edge")
    cleaned_arcs = _clean_pairs(n, arcs, strict, "arc")
    out = set(cleaned_arcs)
    for u, v in cleaned_edges:
        out.add((u, v))
        out.add((v, u))
    return DirectedGraph(n, sorted(out), labels=labels)


def neighbor_intersection(G: UndirectedGraph, u: int, v: int) -> np.ndarray:
    """Common neighbors of u and v, sorted; linear merge of sorted rows."""
    if u == v:
        raise ValueError("u and v must differ")
    return kernels.intersect_sorted(G.neighbors(u), G.neighbors(v))


def connected_components(G: UndirectedGraph) -> VertexPartition:
    """Classes of the ordinary path-connectivity relation."""
    labels = [-1] * G.n
    cls = 0
    for seed in range(G.n):
        if labels[seed] >= 0:
            continue
        stack = [seed]
        labels[seed] = cls
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                w = int(w)
                if labels[w] < 0:
                    labels[w] = cls
                    stack.append(w)
        cls += 1
    return VertexPartition.from_labels(labels)


def biconnected_blocks(G: UndirectedGraph) -> list[tuple[frozenset, int]]:
    """Biconnected components as (vertex set, edge count) pairs.

    Blocks with one edge are bridges; blocks with more edges are
    2-connected and therefore carry a cycle through any two of their
    vertices.  Cached on the graph.
    """
    if "blocks" in G._cache:
        return G._cache["blocks"]
    n = G.n
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    counter = 1
    blocks: list[tuple[frozenset, int]] = []
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        frames = [(root, iter(G.neighbors(root)))]
        while frames:
            v, it = frames[-1]
            descended = False
            for w in it:
                w = int(w)
                if not disc[w]:
                    estack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = counter
                    counter += 1
                    frames.append((w, iter(G.neighbors(w))))
                    descended = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    verts = set()
                    count = 0
                    while True:
                        e = estack.pop()
                        verts.add(e[0])
                        verts.add(e[1])
                        count += 1
                        if e == (u, v):
                            break
                    blocks.append((frozenset(verts), count))
    G._cache["blocks"] = blocks
    return blocks


def cocyclic(G: UndirectedGraph, u: int, v: int) -> bool:
    """True iff u = v or some cycle of G contains both u and v."""
    if u == v:
        return True
    if "cyclic_block_sets" not in G._cache:
        membership: list[set[int]] = [set() for _ in range(G.n)]
        for i, (verts, ecount) in enumerate(biconnected_blocks(G)):
            if ecount >= 2:
                for x in verts:
                    membership[x].add(i)
        G._cache["cyclic_block_sets"] = membership
    membership = G._cache["cyclic_block_sets"]
    return not membership[u].isdisjoint(membership[v])


def reachable_set(D: DirectedGraph, u: int) -> set[int]:
    """Vertices reachable from u by a directed walk, including u."""
    seen = {int(u)}
    stack = [int(u)]
    while stack:
        x = stack.pop()
        for w in D.successors(x):
            w = int(w)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def strong_components(D: DirectedGraph) -> VertexPartition:
    """Tarjan's algorithm, iterative; labels canonicalized by smallest member."""
    n = D.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    labels = [-1] * n
    counter = 0
    cls = 0
    for root in range(n):
        if index[root] != -1:
            continue
        frames = [(root, iter(D.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while frames:
            v, it = frames[-1]
            descended = False
            for w in it:
                w = int(w)
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    frames.append((w, iter(D.successors(w))))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    labels[w] = cls
                    if w == v:
                        break
                cls += 1
    return VertexPartition.from_labels(labels)
