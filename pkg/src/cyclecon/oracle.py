"""Brute-force reference implementations, used by tests and oracle-check.

Everything here favors obviousness over speed and shares no algorithm
code with the production modules: adjacency is rebuilt from the raw
edge/arc lists, cycles come from a plain exhaustive DFS, and chain
connectivity walks the literal cycle-intersection graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OracleGuardError
from .graphs import DirectedGraph, UndirectedGraph
from .partitions import ArcPartition, EdgePartition, VertexPartition

MAX_UNDIRECTED_N = 60
MAX_DIRECTED_N = 30
MAX_SK_ARCS = 14


@dataclass(frozen=True)
class CycleCatalog:
    """Every bounded-length cycle of the base graph, canonical and verified."""

    base: object
    k: int
    directed: bool
    cycles: tuple[tuple[int, ...], ...]


def enumerate_all_cycles(graph, k: int) -> CycleCatalog:
    """All cycles of length <= k (>= 3 undirected, >= 2 directed), each once.

    DFS from every start vertex keeps only cycles whose minimum vertex is
    the start; undirected traversal order is fixed by requiring the second
    vertex to be smaller than the last.
    """
    directed = isinstance(graph, DirectedGraph)
    limit = MAX_DIRECTED_N if directed else MAX_UNDIRECTED_N
    if graph.n > limit:
        raise OracleGuardError(
            f"oracle guard: n={graph.n} exceeds {limit} for "
            f"{'directed' if directed else 'undirected'} graphs"
        )
    if directed:
        cycles = _directed_cycles(graph.n, graph.arcs, k)
        _verify_cycles(cycles, set(graph.arcs), directed=True)
    else:
        cycles = _undirected_cycles(graph.n, graph.edges, k)
        _verify_cycles(cycles, {e for e in graph.edges}, directed=False)
    return CycleCatalog(graph, k, directed, tuple(cycles))


def _undirected_cycles(n, edges, k):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cycles = []
    path = []
    on_path = [False] * n

    def dfs(start, x):
        for w in sorted(adj[x]):
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and not on_path[w] and len(path) < k:
                path.append(w)
                on_path[w] = True
                dfs(start, w)
                path.pop()
                on_path[w] = False

    for s in range(n):
        path[:] = [s]
        on_path[s] = True
        dfs(s, s)
        on_path[s] = False
    return cycles


def _directed_cycles(n, arcs, k):
    succ = [set() for _ in range(n)]
    for u, v in arcs:
        succ[u].add(v)
    cycles = []
    path = []
    on_path = [False] * n

    def dfs(start, x):
        for w in sorted(succ[x]):
            if w == start:
                if len(path) >= 2:
                    cycles.append(tuple(path))
            elif w > start and not on_path[w] and len(path) < k:
                path.append(w)
                on_path[w] = True
                dfs(start, w)
                path.pop()
                on_path[w] = False

    for s in range(n):
        path[:] = [s]
        on_path[s] = True
        dfs(s, s)
        on_path[s] = False
    return cycles


def _verify_cycles(cycles, link_set, directed):
    for cycle in cycles:
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            link = (u, v) if directed or u < v else (v, u)
            if link not in link_set:
                raise AssertionError(f"oracle produced a non-cycle: {cycle}")


def _cycle_links(cycle, mode):
    if mode == "vertex":
        return set(cycle)
    out = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if mode == "arc":
            out.add((u, v))
        else:
            out.add((u, v) if u < v else (v, u))
    return out


def chain_connectivity(catalog: CycleCatalog, mode: str):
    """Chain classes read off the literal cycle-intersection graph.

    Two cycles are adjacent when they share a vertex / edge / arc; BFS
    finds the cycle components, whose unions project to the vertex (or
    edge/arc) classes, with untouched elements as singletons.
    """
    if mode not in ("vertex", "edge", "arc"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "arc" and not catalog.directed:
        raise ValueError("arc mode needs a directed catalog")
    cycles = catalog.cycles
    links = [_cycle_links(c, mode) for c in cycles]

    at_item: dict = {}
    for i, items in enumerate(links):
        for item in items:
            at_item.setdefault(item, []).append(i)

    component = [-1] * len(cycles)
    comp_count = 0
    for seed in range(len(cycles)):
        if component[seed] != -1:
            continue
        stack = [seed]
        component[seed] = comp_count
        while stack:
            i = stack.pop()
            for item in links[i]:
                for j in at_item[item]:
                    if component[j] == -1:
                        component[j] = comp_count
                        stack.append(j)
        comp_count += 1

    spans: list[set] = [set() for _ in range(comp_count)]
    for i, items in enumerate(links):
        spans[component[i]].update(items)

    if mode == "vertex":
        raw = list(range(catalog.base.n))
        for span in spans:
            root = min(span)
            for x in span:
                raw[x] = root
        return VertexPartition.from_labels(raw)

    members = catalog.base.arcs if mode == "arc" else catalog.base.edges
    position = {m: i for i, m in enumerate(members)}
    raw = list(range(len(members)))
    for span in spans:
        ids = sorted(position[item] for item in span)
        for i in ids:
            raw[i] = ids[0]
    cls = ArcPartition if mode == "arc" else EdgePartition
    return cls.from_labels(members, raw)


def _edge_on_short_cycle(adj, a, b, k):
    """Is edge {a,b} on a simple undirected cycle of length <= k?"""
    path = {a}

    def dfs(x, depth):
        if depth > k - 1:
            return False
        for w in sorted(adj[x]):
            if w == b and depth >= 2:
                return True
            if w not in path and w != b and depth < k - 1:
                path.add(w)
                if dfs(w, depth + 1):
                    path.remove(w)
                    return True
                path.remove(w)
        return False

    return dfs(a, 1)


def _strongly_connected_on(arcs, vertices):
    succ: dict = {v: set() for v in vertices}
    pred: dict = {v: set() for v in vertices}
    for u, v in arcs:
        succ[u].add(v)
        pred[v].add(u)

    def sweep(start, nbrs):
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for w in nbrs[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    root = next(iter(vertices))
    return sweep(root, succ) == vertices and sweep(root, pred) == vertices


def bruteforce_sk(D: DirectedGraph, k: int, u: int, v: int) -> bool:
    """Exhaustive strong k-gonal connectivity check over all arc subsets.

    True iff u = v or some arc subset is strongly connected on its vertex
    set, every arc lies on a digon or on an undirected cycle of length <= k
    of the subset, and both u and v appear.
    """
    if D.m > MAX_SK_ARCS:
        raise OracleGuardError(f"oracle guard: |A|={D.m} exceeds {MAX_SK_ARCS}")
    if u == v:
        return True
    arcs = list(D.arcs)
    for mask in range(1, 1 << len(arcs)):
        subset = [arcs[i] for i in range(len(arcs)) if mask >> i & 1]
        vertices = {x for a in subset for x in a}
        if u not in vertices or v not in vertices:
            continue
        if not _strongly_connected_on(subset, vertices):
            continue
        arc_set = set(subset)
        adj: dict = {x: set() for x in vertices}
        for a, b in subset:
            adj[a].add(b)
            adj[b].add(a)
        ok = True
        for a, b in subset:
            if (b, a) in arc_set:
                continue
            if not _edge_on_short_cycle(adj, a, b, k):
                ok = False
                break
        if ok:
            return True
    return False
