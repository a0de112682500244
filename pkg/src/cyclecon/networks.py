"""Weighted subnetworks: an edge/arc subset with positive integer counts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class WeightedSubnetwork:
    """Members of the base graph that carry a positive cycle count.

    Membership requires weight >= 1; everything else is simply absent and
    reports weight 0.
    """

    base: object
    members: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]
    directed: bool
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.members) != len(self.weights):
            raise ValueError("members and weights differ in length")
        if any(w < 1 for w in self.weights):
            raise ValueError("subnetwork members must have weight >= 1")
        object.__setattr__(
            self, "_index", {m: i for i, m in enumerate(self.members)}
        )

    def _key(self, member):
        if self.directed:
            return tuple(member)
        u, v = member
        return (u, v) if u < v else (v, u)

    def __contains__(self, member) -> bool:
        return self._key(member) in self._index

    def __len__(self) -> int:
        return len(self.members)

    def weight(self, member) -> int:
        i = self._index.get(self._key(member))
        return 0 if i is None else self.weights[i]

    def weight_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.members, self.weights))

    def total_weight(self) -> int:
        return sum(self.weights)

    def subgraph(self):
        """The base graph restricted to the member edges/arcs."""
        if self.directed:
            return DirectedGraph(self.base.n, self.members)
        return UndirectedGraph(self.base.n, self.members)


def from_weight_map(base, mapping: dict, directed: bool) -> WeightedSubnetwork:
    """Subnetwork of the members with positive weight, in id order."""
    members = []
    weights = []
    for member in (base.arcs if directed else base.edges):
        w = mapping.get(member, 0)
        if w > 0:
            members.append(member)
            weights.append(int(w))
    return WeightedSubnetwork(base, tuple(members), tuple(weights), directed)
