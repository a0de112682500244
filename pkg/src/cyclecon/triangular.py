"""Triangle (3-cycle) connectivity on undirected graphs, and the four
directed-triangle networks.

The undirected operations are the O(max_degree * m) worklist sweeps over
sorted adjacency; their inner loops live in the kernels module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConsistencyError
from .graphs import DirectedGraph, UndirectedGraph
from .networks import WeightedSubnetwork
from .partitions import EdgePartition, VertexPartition


def k3_components(G: UndirectedGraph) -> VertexPartition:
    """Vertex triangular-connectivity classes.

    Seeds a vertex, then repeatedly pulls a vertex u from the worklist and,
    for every neighbor v sharing a common neighbor with u, enqueues v and
    the common neighbors.  Vertices on no triangle end up as singletons.
    """
    raw = kernels.k3_labels(G.indptr, G.indices)
    return VertexPartition.from_labels(raw.tolist())


def triangular_network(G: UndirectedGraph) -> WeightedSubnetwork:
    """Edges that lie on a triangle, weighted by their triangle count."""
    w = kernels.triangle_weights(G.indptr, G.indices, G.edge_u, G.edge_v)
    members = []
    weights = []
    for e in range(G.m):
        if w[e] > 0:
            members.append(G.edges[e])
            weights.append(int(w[e]))
    return WeightedSubnetwork(G, tuple(members), tuple(weights), directed=False)


def triangle_count_per_vertex(G: UndirectedGraph) -> np.ndarray:
    """t(v): number of distinct triangles containing each vertex.

    Derived from the edge weights: the triangle weights of the edges at v
    count every triangle at v twice.
    """
    w = kernels.triangle_weights(G.indptr, G.indices, G.edge_u, G.edge_v)
    sums = np.zeros(G.n, dtype=np.int64)
    np.add.at(sums, G.edge_u, w)
    np.add.at(sums, G.edge_v, w)
    if np.any(sums % 2):
        raise ConsistencyError("odd incident triangle-weight sum; w3 is broken")
    return sums // 2


def l3_edge_classes(G: UndirectedGraph) -> EdgePartition:
    """Edge triangular-connectivity classes (adjacent triangles share an edge).

    Edge worklist with tombstones: an edge joins the worklist at most once
    and never re-enters after assignment.  Edges on no triangle are
    singleton classes.
    """
    raw = kernels.l3_labels(G.indptr, G.indices, G.csr_eids, G.edge_u, G.edge_v)
    return EdgePartition.from_labels(G.edges, raw.tolist())


def l3_vertex_related(P: EdgePartition, u: int, v: int) -> bool:
    """True iff u = v or a nontrivial class has edges covering u and v.

    Only classes with at least two edges count: those are exactly the
    classes containing a triangle, i.e. the ones a chain can run through.
    (A singleton class is an edge on no triangle; relating its endpoints
    would put bridge endpoints into the relation, which the containment
    in cocyclicity forbids.)  Not transitive on vertices, which is why
    this is a query and not a partition.
    """
    if u == v:
        return True
    spans = _class_spans(P)
    return any(u in span and v in span for span in spans)


def _class_spans(P: EdgePartition) -> list[set[int]]:
    """Endpoint spans of the nontrivial (>= 2 edge) classes, cached on P."""
    spans = getattr(P, "_spans_cache", None)
    if spans is None:
        sizes = [0] * P.k
        for c in P.labels:
            sizes[c - 1] += 1
        raw: dict[int, set[int]] = {}
        for (a, b), c in zip(P.members, P.labels):
            if sizes[c - 1] >= 2:
                raw.setdefault(c, set()).update((a, b))
        spans = list(raw.values())
        object.__setattr__(P, "_spans_cache", spans)
    return spans


@dataclass(frozen=True)
class TriangleTypeCounts:
    """Counts of the four directed-triangle orientations around one arc."""

    cyc: int
    tra: int
    inp: int
    out: int


def classify_directed_triangles(D: DirectedGraph, a: tuple[int, int]) -> TriangleTypeCounts:
    """Count cyclic/transitive/input/output triangles anchored at arc a.

    For a = (u, v) and a third vertex w: cyclic needs (v,w),(w,u);
    transitive needs (u,w),(w,v) with a as the shortcut; input needs
    (w,u),(w,v); output needs (u,w),(v,w).  One w can contribute to
    several types when several arc pairs exist.
    """
    u, v = a
    if not D.has_arc(u, v):
        raise ValueError(f"arc ({u}, {v}) not in graph")
    cyc = kernels.intersect_sorted(D.successors(v), D.predecessors(u)).size
    tra = kernels.intersect_sorted(D.successors(u), D.predecessors(v)).size
    inp = kernels.intersect_sorted(D.predecessors(u), D.predecessors(v)).size
    out = kernels.intersect_sorted(D.successors(u), D.successors(v)).size
    return TriangleTypeCounts(int(cyc), int(tra), int(inp), int(out))


def directed_triangle_networks(D: DirectedGraph) -> dict[str, WeightedSubnetwork]:
    """The four arc networks keyed 'cyc', 'tra', 'in', 'out'.

    Arc weights are the per-type triangle counts; arcs with count zero are
    not members.
    """
    cyc, tra, inp, out = kernels.directed_triangle_counts(
        D.out_indptr, D.out_indices, D.in_indptr, D.in_indices,
        D.arc_u, D.arc_v,
    )
    result = {}
    for key, counts in (("cyc", cyc), ("tra", tra), ("in", inp), ("out", out)):
        members = []
        weights = []
        for i in range(D.m):
            if counts[i] > 0:
                members.append(D.arcs[i])
                weights.append(int(counts[i]))
        result[key] = WeightedSubnetwork(D, tuple(members), tuple(weights),
                                         directed=True)
    return result
