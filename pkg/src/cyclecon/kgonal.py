"""Connectivity by cycles of length at most k on undirected graphs.

Counting all bounded cycles is exponential in the length cap, so every
operation here threads a shared enumeration budget (see the budget
module) and the cap defaults to length 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .budget import CycleBudget, as_budget, check_cycle_length
from .graphs import UndirectedGraph, cocyclic, connected_components
from .networks import WeightedSubnetwork
from .partitions import EdgePartition, VertexPartition
from .unionfind import UnionFind


@dataclass(frozen=True)
class CycleSubgraph:
    """One undirected cycle in canonical form.

    The vertex sequence is rotated to start at the smallest id and
    reflected so the second vertex is smaller than the last, which makes
    equal cycles compare equal.
    """

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "CycleSubgraph":
        return cls(canonical_cycle(seq))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            out.append((u, v) if u < v else (v, u))
        return out


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def _for_each_closing_path(G: UndirectedGraph, u: int, v: int, k: int,
                           budget: CycleBudget,
                           emit: Callable[[list[int]], None]) -> None:
    """Call emit for every simple path u..v of 2..k-1 edges avoiding edge {u,v}.

    Together with the edge {u,v} each such path closes exactly one cycle of
    length 3..k through the edge, and each cycle is produced once (paths
    are only walked in the u-to-v orientation).
    """
    visited = bytearray(G.n)
    visited[u] = 1
    path = [u]

    def extend():
        x = path[-1]
        room = len(path) <= k - 2
        for w in G.neighbors(x):
            w = int(w)
            if w == v:
                if len(path) >= 2:
                    budget.spend()
                    emit(path)
            elif room and not visited[w]:
                visited[w] = 1
                path.append(w)
                extend()
                path.pop()
                visited[w] = 0

    extend()


def cycles_through_edge(G: UndirectedGraph, e: tuple[int, int], k: int,
                        budget: int | CycleBudget | None = None,
                        allow_large_k: bool = False) -> list[CycleSubgraph]:
    """All cycles of length 3..k containing edge e, each exactly once."""
    check_cycle_length(k, 3, allow_large_k)
    u, v = e
    if not G.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    b = as_budget(budget)
    out: list[CycleSubgraph] = []
    _for_each_closing_path(
        G, u, v, k, b, lambda path: out.append(CycleSubgraph.from_sequence(path + [v]))
    )
    return out


def kgonal_network(G: UndirectedGraph, k: int,
                   budget: int | CycleBudget | None = None,
                   allow_large_k: bool = False) -> WeightedSubnetwork:
    """Edges on at least one cycle of length <= k, weighted by cycle count."""
    check_cycle_length(k, 3, allow_large_k)
    b = as_budget(budget)
    members = []
    weights = []
    count = [0]

    def bump(_path):
        count[0] += 1

    for e in G.edges:
        count[0] = 0
        _for_each_closing_path(G, e[0], e[1], k, b, bump)
        if count[0] > 0:
            members.append(e)
            weights.append(count[0])
    return WeightedSubnetwork(G, tuple(members), tuple(weights), directed=False)


def kk_components(G: UndirectedGraph, k: int,
                  budget: int | CycleBudget | None = None,
                  allow_large_k: bool = False) -> VertexPartition:
    """Vertex k-gonal connectivity: components of the k-gonal subnetwork."""
    net = kgonal_network(G, k, budget=budget, allow_large_k=allow_large_k)
    return connected_components(net.subgraph())


def lk_edge_classes(G: UndirectedGraph, k: int,
                    budget: int | CycleBudget | None = None,
                    allow_large_k: bool = False) -> EdgePartition:
    """Edge k-gonal connectivity via union-find over bounded cycles.

    Each cycle is attributed to its minimum edge id so it is merged exactly
    once even though the per-edge enumeration sees it once per member edge.
    """
    check_cycle_length(k, 3, allow_large_k)
    b = as_budget(budget)
    uf = UnionFind(G.m)

    for eid, e in enumerate(G.edges):

        def merge(path, eid=eid, u=e[0], v=e[1]):
            ids = [eid]
            prev = u
            for w in path[1:]:
                ids.append(G.edge_id(prev, w))
                prev = w
            ids.append(G.edge_id(prev, v))
            if min(ids) == eid:
                for other in ids[1:]:
                    uf.union(eid, other)

        _for_each_closing_path(G, e[0], e[1], k, b, merge)
    return EdgePartition.from_labels(G.edges, uf.labels())


def bk_related(G: UndirectedGraph, k: int, u: int, v: int,
               kk: VertexPartition | None = None,
               budget: int | CycleBudget | None = None) -> bool:
    """Cocyclic and k-gonally connected; pass kk to reuse a partition."""
    if u == v:
        return True
    if kk is None:
        kk = kk_components(G, k, budget=budget)
    return kk.same_class(u, v) and cocyclic(G, u, v)


@dataclass(frozen=True)
class EverettDecomposition:
    """Nontrivial k-gonal components plus the bridges between them.

    Components and bridges together partition the vertex set; bridges are
    the connected pieces left after removing all component vertices.
    """

    components: tuple[tuple[int, ...], ...]
    bridges: tuple[tuple[int, ...], ...]

    def as_partition(self, n: int) -> VertexPartition:
        """Single labeling: components first, then bridges, by smallest member."""
        labels = [0] * n
        nxt = 1
        for group in list(self.components) + list(self.bridges):
            for v in group:
                labels[v] = nxt
            nxt += 1
        return VertexPartition(tuple(labels), nxt - 1)


def everett_decomposition(G: UndirectedGraph, k: int,
                          budget: int | CycleBudget | None = None,
                          allow_large_k: bool = False) -> EverettDecomposition:
    kk = kk_components(G, k, budget=budget, allow_large_k=allow_large_k)
    classes = kk.classes()
    components = [tuple(c) for c in classes if len(c) > 1]
    in_component = [False] * G.n
    for c in components:
        for v in c:
            in_component[v] = True
    bridges = []
    seen = [False] * G.n
    for seed in range(G.n):
        if in_component[seed] or seen[seed]:
            continue
        group = []
        stack = [seed]
        seen[seed] = True
        while stack:
            x = stack.pop()
            group.append(x)
            for w in G.neighbors(x):
                w = int(w)
                if not in_component[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        bridges.append(tuple(sorted(group)))
    return EverettDecomposition(tuple(components), tuple(bridges))


def clique_weight_lower_bound(r: int, k: int) -> int:
    """Guaranteed k-gonal weight of an edge inside an r-clique.

    Sum over cycle lengths i = 3..k of (r-2)(r-3)...(r-i+1); terms that hit
    a zero or negative factor contribute nothing.
    """
    if r < 3:
        raise ValueError(f"clique size must be >= 3, got {r}")
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    total = 0
    for i in range(3, k + 1):
        term = 1
        for j in range(2, i):
            factor = r - j
            if factor <= 0:
                term = 0
                break
            term *= factor
        total += term
    return total
