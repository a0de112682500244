"""Short-cycle machinery on digraphs: cyclic/arc/strong k-gonal
connectivity, feedback/transitive/support networks, k-long arcs, the
acyclic reduction, and reachability over transitive shortcuts.

Directed cycles may have length 2 (a pair of opposite arcs), so k = 2
reproduces plain symmetric connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import kernels
from .budget import CycleBudget, as_budget, check_cycle_length
from .errors import PathRemovalError
from .graphs import DirectedGraph, UndirectedGraph, strong_components
from .kgonal import kgonal_network
from .networks import WeightedSubnetwork
from .partitions import ArcPartition, VertexPartition
from .unionfind import UnionFind


@dataclass(frozen=True)
class DirectedCycle:
    """One directed cycle, rotated so the smallest vertex id comes first."""

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "DirectedCycle":
        seq = list(seq)
        i = seq.index(min(seq))
        return cls(tuple(seq[i:] + seq[:i]))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(u, vs[(i + 1) % len(vs)]) for i, u in enumerate(vs)]


@dataclass(frozen=True)
class TransitiveSemicycle:
    """A shortcut arc together with one directed reinforcement path.

    The path runs from the shortcut's tail to its head, has 2..k-1 arcs,
    and its interior avoids both endpoints, so path plus shortcut form a
    semicycle of length at most k.
    """

    shortcut: tuple[int, int]
    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path)

    def path_arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.path[:-1], self.path[1:]))


def _for_each_return_path(D: DirectedGraph, v: int, u: int, k: int,
                          budget: CycleBudget,
                          emit: Callable[[list[int]], None]) -> None:
    """Emit every simple directed path v..u with 1..k-1 arcs avoiding u inside.

    Prepending the arc (u, v) turns each path into one directed cycle of
    length 2..k, each produced exactly once.
    """
    visited = bytearray(D.n)
    visited[v] = 1
    visited[u] = 1
    path = [v]

    def extend():
        x = path[-1]
        room = len(path) <= k - 2
        for w in D.successors(x):
            w = int(w)
            if w == u:
                budget.spend()
                emit(path)
            elif room and not visited[w]:
                visited[w] = 1
                path.append(w)
                extend()
                path.pop()
                visited[w] = 0

    extend()


def directed_cycles_through_arc(D: DirectedGraph, a: tuple[int, int], k: int,
                                budget: int | CycleBudget | None = None,
                                allow_large_k: bool = False) -> list[DirectedCycle]:
    """All directed cycles of length 2..k containing arc a, each once."""
    check_cycle_length(k, 2, allow_large_k)
    u, v = a
    if not D.has_arc(u, v):
        raise ValueError(f"arc ({u}, {v}) not in graph")
    b = as_budget(budget)
    out: list[DirectedCycle] = []
    _for_each_return_path(
        D, v, u, k, b, lambda path: out.append(DirectedCycle.from_sequence([u] + path))
    )
    return out


def feedback_network(D: DirectedGraph, k: int,
                     budget: int | CycleBudget | None = None,
                     allow_large_k: bool = False) -> WeightedSubnetwork:
    """Arcs on at least one directed cycle of length <= k, weighted by count."""
    check_cycle_length(k, 2, allow_large_k)
    b = as_budget(budget)
    members = []
    weights = []
    count = [0]

    def bump(_path):
        count[0] += 1

    for u, v in D.arcs:
        count[0] = 0
        _for_each_return_path(D, v, u, k, b, bump)
        if count[0] > 0:
            members.append((u, v))
            weights.append(count[0])
    return WeightedSubnetwork(D, tuple(members), tuple(weights), directed=True)


def _for_each_reinforcement_path(D: DirectedGraph, u: int, v: int, k: int,
                                 budget: CycleBudget,
                                 emit: Callable[[list[int]], None]) -> None:
    """Emit simple paths u..v of 2..k-1 arcs whose interior avoids u and v."""
    visited = bytearray(D.n)
    visited[u] = 1
    visited[v] = 1
    path = [u]

    def extend():
        x = path[-1]
        room = len(path) <= k - 2
        for w in D.successors(x):
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


def transitive_semicycles_of_arc(D: DirectedGraph, a: tuple[int, int], k: int,
                                 budget: int | CycleBudget | None = None,
                                 allow_large_k: bool = False) -> list[TransitiveSemicycle]:
    """All transitive semicycles of length <= k with shortcut a."""
    check_cycle_length(k, 3, allow_large_k)
    u, v = a
    if not D.has_arc(u, v):
        raise ValueError(f"arc ({u}, {v}) not in graph")
    b = as_budget(budget)
    out: list[TransitiveSemicycle] = []
    _for_each_reinforcement_path(
        D, u, v, k, b,
        lambda path: out.append(TransitiveSemicycle((u, v), tuple(path + [v]))),
    )
    return out


def transitive_support_networks(D: DirectedGraph, k: int,
                                budget: int | CycleBudget | None = None,
                                allow_large_k: bool = False,
                                ) -> tuple[WeightedSubnetwork, WeightedSubnetwork]:
    """Transitive and support networks over semicycles of length <= k.

    A semicycle counts once toward its shortcut's transitive weight and
    once toward the support weight of every arc on its reinforcement path.
    """
    check_cycle_length(k, 3, allow_large_k)
    b = as_budget(budget)
    w_t = [0] * D.m
    w_s = [0] * D.m

    for aid, (u, v) in enumerate(D.arcs):

        def tally(path, aid=aid, v=v):
            w_t[aid] += 1
            prev = path[0]
            for x in path[1:]:
                w_s[D.arc_id(prev, x)] += 1
                prev = x
            w_s[D.arc_id(prev, v)] += 1

        _for_each_reinforcement_path(D, u, v, k, b, tally)

    def pack(weights):
        members = []
        kept = []
        for i, w in enumerate(weights):
            if w > 0:
                members.append(D.arcs[i])
                kept.append(w)
        return WeightedSubnetwork(D, tuple(members), tuple(kept), directed=True)

    return pack(w_t), pack(w_s)


def ck_components(D: DirectedGraph, k: int,
                  budget: int | CycleBudget | None = None,
                  allow_large_k: bool = False) -> VertexPartition:
    """Cyclic k-gonal connectivity: strong components of the feedback subgraph."""
    net = feedback_network(D, k, budget=budget, allow_large_k=allow_large_k)
    return strong_components(net.subgraph())


def dk_arc_classes(D: DirectedGraph, k: int,
                   budget: int | CycleBudget | None = None,
                   allow_large_k: bool = False) -> ArcPartition:
    """Arc cyclic k-gonal connectivity via union-find over bounded cycles.

    Each cycle is attributed to its minimum arc id, mirroring the edge
    variant.
    """
    check_cycle_length(k, 2, allow_large_k)
    b = as_budget(budget)
    uf = UnionFind(D.m)

    for aid, (u, v) in enumerate(D.arcs):

        def merge(path, aid=aid, u=u, v=v):
            ids = [aid]
            prev = v
            for w in path[1:]:
                ids.append(D.arc_id(prev, w))
                prev = w
            ids.append(D.arc_id(prev, u))
            if min(ids) == aid:
                for other in ids[1:]:
                    uf.union(aid, other)

        _for_each_return_path(D, v, u, k, b, merge)
    return ArcPartition.from_labels(D.arcs, uf.labels())


def k_long_arcs(D: DirectedGraph, k: int,
                budget: int | CycleBudget | None = None,
                allow_large_k: bool = False) -> list[tuple[int, int]]:
    """Arcs on some directed cycle but on none of length <= k."""
    check_cycle_length(k, 2, allow_large_k)
    scc = strong_components(D)
    net = feedback_network(D, k, budget=budget, allow_large_k=allow_large_k)
    short = set(net.members)
    return [a for a in D.arcs if scc.same_class(a[0], a[1]) and a not in short]


@dataclass(frozen=True)
class ReductionGraph:
    """Quotient of a digraph by its cyclic k-gonal classes."""

    classes: VertexPartition
    arcs: tuple[tuple[int, int], ...]

    def quotient_digraph(self) -> DirectedGraph:
        return DirectedGraph(self.classes.k, [(x - 1, y - 1) for x, y in self.arcs])

    def is_acyclic(self) -> bool:
        q = self.quotient_digraph()
        indeg = [0] * q.n
        for _, y in q.arcs:
            indeg[y] += 1
        ready = [x for x in range(q.n) if indeg[x] == 0]
        seen = 0
        while ready:
            x = ready.pop()
            seen += 1
            for y in q.successors(x):
                y = int(y)
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        return seen == q.n


def cyclic_reduction(D: DirectedGraph, k: int,
                     budget: int | CycleBudget | None = None,
                     allow_large_k: bool = False) -> ReductionGraph:
    """Quotient by ck classes; acyclic whenever D has no k-long arcs.

    Class pairs use the partition's 1-based ids.
    """
    classes = ck_components(D, k, budget=budget, allow_large_k=allow_large_k)
    quotient_arcs = set()
    for u, v in D.arcs:
        cu = classes.labels[u]
        cv = classes.labels[v]
        if cu != cv:
            quotient_arcs.add((cu, cv))
    return ReductionGraph(classes, tuple(sorted(quotient_arcs)))


def sk_components(D: DirectedGraph, k: int,
                  budget: int | CycleBudget | None = None,
                  allow_large_k: bool = False) -> VertexPartition:
    """Strong k-gonal connectivity by greatest-fixpoint pruning.

    Starting from each strong component, repeatedly drop arcs whose
    underlying edge lies on no cycle of length <= k of the current
    subgraph's underlying graph (a pair of opposite arcs counts as a
    2-gone, keeping cyclic connectivity inside strong connectivity), drop
    vertices this isolates, re-split into strong components, and iterate.
    Surviving component vertex sets are the nontrivial classes.
    """
    check_cycle_length(k, 3, allow_large_k)
    b = as_budget(budget)
    scc = strong_components(D)
    work: list[list[tuple[int, int]]] = []
    for group in scc.classes():
        if len(group) < 2:
            continue
        members = set(group)
        work.append([a for a in D.arcs if a[0] in members and a[1] in members])

    final_groups: list[set[int]] = []
    while work:
        arcs = work.pop()
        arc_set = set(arcs)
        digons = {(u, v) for u, v in arcs if u < v and (v, u) in arc_set}
        und = sorted({(u, v) if u < v else (v, u) for u, v in arcs})
        subgraph = UndirectedGraph(D.n, und)
        net = kgonal_network(subgraph, k, budget=b, allow_large_k=allow_large_k)
        good = set(net.members) | digons
        kept = [a for a in arcs
                if ((a[0], a[1]) if a[0] < a[1] else (a[1], a[0])) in good]
        if len(kept) == len(arcs):
            verts = {x for a in arcs for x in a}
            final_groups.append(verts)
            continue
        if not kept:
            continue
        sub = DirectedGraph(D.n, sorted(kept))
        parts = strong_components(sub)
        buckets: dict[int, list[tuple[int, int]]] = {}
        for a in kept:
            cu = parts.labels[a[0]]
            if cu == parts.labels[a[1]]:
                buckets.setdefault(cu, []).append(a)
        work.extend(buckets.values())

    raw = list(range(D.n))
    for group in final_groups:
        root = min(group)
        for x in group:
            raw[x] = root
    return VertexPartition.from_labels(raw)


def k_transitive_arcs(D: DirectedGraph, k: int,
                      budget: int | CycleBudget | None = None,
                      allow_large_k: bool = False) -> list[tuple[int, int]]:
    """Arcs that are the shortcut of some transitive semicycle of length <= k."""
    n_t, _ = transitive_support_networks(D, k, budget=budget,
                                         allow_large_k=allow_large_k)
    return list(n_t.members)


def tk_reachability(D: DirectedGraph, k: int, u: int,
                    budget: int | CycleBudget | None = None,
                    allow_large_k: bool = False) -> set[int]:
    """Vertices reachable from u along k-transitive arcs only, plus u."""
    arcs = k_transitive_arcs(D, k, budget=budget, allow_large_k=allow_large_k)
    succ: dict[int, list[int]] = {}
    for a, bv in arcs:
        succ.setdefault(a, []).append(bv)
    seen = {int(u)}
    stack = [int(u)]
    while stack:
        x = stack.pop()
        for w in succ.get(x, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def mutual_tk_classes(D: DirectedGraph, k: int,
                      budget: int | CycleBudget | None = None,
                      allow_large_k: bool = False) -> VertexPartition:
    """Mutual k-transitive reachability: strong components over transitive arcs."""
    arcs = k_transitive_arcs(D, k, budget=budget, allow_large_k=allow_large_k)
    return strong_components(D.subgraph_with_arcs(arcs))


def remove_transitive_path(D: DirectedGraph,
                           path: Sequence[tuple[int, int]]) -> DirectedGraph:
    """Remove a directed path whose every arc has a two-arc bypass.

    Reachability is provably unchanged for such paths; removing arbitrary
    sets of transitive arcs is rejected because it can disconnect targets.
    """
    arcs = [tuple(a) for a in path]
    if not arcs:
        raise PathRemovalError("empty arc sequence")
    for a in arcs:
        if not D.has_arc(*a):
            raise PathRemovalError(f"arc {a} not in graph")
    for prev, nxt in zip(arcs[:-1], arcs[1:]):
        if prev[1] != nxt[0]:
            raise PathRemovalError(f"arcs {prev} and {nxt} do not chain")
    vertices = [arcs[0][0]] + [a[1] for a in arcs]
    if len(set(vertices)) != len(vertices):
        raise PathRemovalError("arc sequence is not a simple path")
    for u, v in arcs:
        bypass = kernels.intersect_sorted(D.successors(u), D.predecessors(v))
        if bypass.size == 0:
            raise PathRemovalError(f"arc ({u}, {v}) has no transitive bypass")
    removed = set(arcs)
    return D.subgraph_with_arcs([a for a in D.arcs if a not in removed])
