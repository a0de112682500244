"""Chain connectivity by arbitrary small-subgraph families.

Chains are sequences of family members where consecutive members overlap
in a prescribed pattern (shared vertices, a shared edge, or a shared
clique).  Vertex chain relations of this kind are not transitive in
general, so the full result keeps the member classes around: ``related``
answers the exact chain relation while ``vertex_partition`` is its
transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import CycleBudget, as_budget, check_cycle_length
from .graphs import UndirectedGraph
from .kgonal import CycleSubgraph, cycles_through_edge
from .partitions import VertexPartition, canonical_labels
from .unionfind import UnionFind

MAX_CLIQUE_SIZE = 12


@dataclass(frozen=True)
class FamilySpec:
    """Which subgraphs may serve as chain members."""

    kind: str  # "cycles" or "cliques"
    lo: int
    hi: int

    @classmethod
    def cycles_up_to(cls, k: int, allow_large_k: bool = False) -> "FamilySpec":
        check_cycle_length(k, 3, allow_large_k)
        return cls("cycles", 3, k)

    @classmethod
    def cliques(cls, rmin: int, rmax: int, allow_large: bool = False) -> "FamilySpec":
        if rmin < 2:
            raise ValueError(f"smallest clique size must be >= 2, got {rmin}")
        if rmax < rmin:
            raise ValueError(f"empty clique range {rmin}..{rmax}")
        if rmax > MAX_CLIQUE_SIZE and not allow_large:
            raise ValueError(
                f"clique size {rmax} exceeds the default cap {MAX_CLIQUE_SIZE}; "
                "pass allow_large=True if you really want this"
            )
        return cls("cliques", rmin, rmax)


@dataclass(frozen=True)
class OverlapSpec:
    """What consecutive chain members must share.

    Kinds: 'vertices' with a minimum count (require_edge additionally asks
    for a common member edge, the K2 overlap), or 'clique' asking for a
    complete subgraph of the member intersection.
    """

    kind: str
    count: int
    require_edge: bool = False

    @classmethod
    def shared_vertices(cls, t: int, require_edge: bool = False) -> "OverlapSpec":
        if t < 1:
            raise ValueError(f"overlap count must be >= 1, got {t}")
        if require_edge and t != 2:
            raise ValueError("require_edge only makes sense with t = 2")
        return cls("vertices", t, require_edge)

    @classmethod
    def shared_edge(cls) -> "OverlapSpec":
        return cls("vertices", 2, True)

    @classmethod
    def shared_clique(cls, r: int) -> "OverlapSpec":
        if r < 1:
            raise ValueError(f"clique overlap size must be >= 1, got {r}")
        return cls("clique", r)


@dataclass(frozen=True)
class FamilyMember:
    """One enumerated subgraph: its vertex set and edge set."""

    vertices: frozenset
    edges: frozenset


def enumerate_family(G: UndirectedGraph, spec: FamilySpec,
                     budget: int | CycleBudget | None = None) -> list[FamilyMember]:
    """All subgraphs of G matching the family, each exactly once."""
    b = as_budget(budget)
    if spec.kind == "cycles":
        return _enumerate_cycles(G, spec.hi, b)
    return _enumerate_cliques(G, spec.lo, spec.hi, b)


def _enumerate_cycles(G: UndirectedGraph, k: int, budget: CycleBudget) -> list[FamilyMember]:
    members = []
    for eid, e in enumerate(G.edges):
        for cycle in cycles_through_edge(G, e, k, budget=budget, allow_large_k=True):
            edges = cycle.edges()
            if min(G.edge_id(*f) for f in edges) == eid:
                members.append(FamilyMember(frozenset(cycle.vertices), frozenset(edges)))
    return members


def _enumerate_cliques(G: UndirectedGraph, rmin: int, rmax: int,
                       budget: CycleBudget) -> list[FamilyMember]:
    members = []
    neighbor_sets = [set(map(int, G.neighbors(v))) for v in range(G.n)]

    def emit(clique):
        budget.spend()
        edges = frozenset(
            (a, c) if a < c else (c, a) for a, c in combinations(clique, 2)
        )
        members.append(FamilyMember(frozenset(clique), edges))

    def extend(clique, candidates):
        if len(clique) >= rmin:
            emit(clique)
        if len(clique) == rmax:
            return
        for w in sorted(candidates):
            extend(clique + [w],
                   {x for x in candidates if x > w and x in neighbor_sets[w]})

    for v in range(G.n):
        extend([v], {w for w in neighbor_sets[v] if w > v})
    return members


def _overlaps(a: FamilyMember, b: FamilyMember, spec: OverlapSpec) -> bool:
    if spec.kind == "vertices":
        if spec.require_edge:
            return not a.edges.isdisjoint(b.edges)
        return len(a.vertices & b.vertices) >= spec.count
    r = spec.count
    if r == 1:
        return not a.vertices.isdisjoint(b.vertices)
    common_edges = a.edges & b.edges
    if r == 2:
        return bool(common_edges)
    common = a.vertices & b.vertices
    if len(common) < r:
        return False
    for group in combinations(sorted(common), r):
        need = combinations(group, 2)
        if all(((x, y) if x < y else (y, x)) in common_edges for x, y in need):
            return True
    return False


@dataclass(frozen=True)
class ChainConnectivity:
    """Member chain classes plus the derived vertex-level views."""

    n: int
    members: tuple[FamilyMember, ...]
    labels: tuple[int, ...]
    k: int

    def spans(self) -> list[frozenset]:
        cached = getattr(self, "_spans", None)
        if cached is None:
            raw = [set() for _ in range(self.k)]
            for member, c in zip(self.members, self.labels):
                raw[c - 1].update(member.vertices)
            cached = [frozenset(s) for s in raw]
            object.__setattr__(self, "_spans", cached)
        return cached

    def related(self, u: int, v: int) -> bool:
        """Exact chain relation: u = v or one member class spans both."""
        if u == v:
            return True
        classes_at = getattr(self, "_classes_at", None)
        if classes_at is None:
            classes_at = [set() for _ in range(self.n)]
            for i, span in enumerate(self.spans()):
                for x in span:
                    classes_at[x].add(i)
            object.__setattr__(self, "_classes_at", classes_at)
        return not classes_at[u].isdisjoint(classes_at[v])

    def vertex_partition(self) -> VertexPartition:
        """Transitive closure of the chain relation as a vertex partition."""
        uf = UnionFind(self.n)
        for span in self.spans():
            it = iter(sorted(span))
            first = next(it)
            for x in it:
                uf.union(first, x)
        return VertexPartition.from_labels(uf.labels())


def hh0_connectivity(G: UndirectedGraph, family: FamilySpec, overlap: OverlapSpec,
                     budget: int | CycleBudget | None = None) -> ChainConnectivity:
    """Union-find over family members linked by the overlap predicate."""
    b = as_budget(budget)
    members = enumerate_family(G, family, budget=b)
    uf = UnionFind(len(members))

    if overlap.kind == "vertices" and overlap.count == 1 and not overlap.require_edge:
        _union_by_index(uf, members, lambda m: m.vertices)
    elif (overlap.kind == "vertices" and overlap.require_edge) or \
            (overlap.kind == "clique" and overlap.count == 2):
        _union_by_index(uf, members, lambda m: m.edges)
    elif overlap.kind == "clique" and overlap.count == 1:
        _union_by_index(uf, members, lambda m: m.vertices)
    else:
        for i, j in _candidate_pairs(members):
            if uf.find(i) != uf.find(j) and _overlaps(members[i], members[j], overlap):
                uf.union(i, j)

    labels, k = canonical_labels(uf.labels())
    return ChainConnectivity(G.n, tuple(members), labels, k)


def _union_by_index(uf: UnionFind, members, key) -> None:
    index: dict = {}
    for i, member in enumerate(members):
        for item in key(member):
            j = index.setdefault(item, i)
            if j != i:
                uf.union(i, j)


def _candidate_pairs(members):
    """Member pairs sharing at least one vertex, via an inverted index."""
    at_vertex: dict[int, list[int]] = {}
    for i, member in enumerate(members):
        for v in member.vertices:
            at_vertex.setdefault(v, []).append(i)
    seen = set()
    for ids in at_vertex.values():
        for i, j in combinations(ids, 2):
            if (i, j) not in seen:
                seen.add((i, j))
                yield i, j


def hh0_components(G: UndirectedGraph, family: FamilySpec, overlap: OverlapSpec,
                   budget: int | CycleBudget | None = None) -> VertexPartition:
    """Vertex partition generated by the chain classes (transitive closure)."""
    return hh0_connectivity(G, family, overlap, budget=budget).vertex_partition()


def kr_clique_connectivity(G: UndirectedGraph, k: int, r: int,
                           budget: int | CycleBudget | None = None) -> ChainConnectivity:
    """Clique chains: members K_{r+1}..K_k (never below triangles), overlap K_r.

    Allowing K_2 members for r = 1 would collapse the relation to plain
    connectivity, so member size is clamped to >= 3.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if r >= k:
        raise ValueError(f"need r < k, got r={r}, k={k}")
    family = FamilySpec.cliques(max(r + 1, 3), k)
    return hh0_connectivity(G, family, OverlapSpec.shared_clique(r), budget=budget)


def kr_clique_components(G: UndirectedGraph, k: int, r: int,
                         budget: int | CycleBudget | None = None) -> VertexPartition:
    return kr_clique_connectivity(G, k, r, budget=budget).vertex_partition()
