"""Equivalence-class labelings over vertices, edges and arcs.

Labels are 1-based and canonical: classes are numbered in order of their
smallest member (vertex id, or edge/arc id in the graph's member order),
so two structurally equal partitions compare equal with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


def canonical_labels(raw: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Renumber arbitrary class labels to 1..k ordered by smallest member."""
    remap: dict[int, int] = {}
    out = []
    for label in raw:
        if label not in remap:
            remap[label] = len(remap) + 1
        out.append(remap[label])
    return tuple(out), len(remap)


@dataclass(frozen=True)
class VertexPartition:
    """Per-vertex class ids 1..k, gap-free."""

    labels: tuple[int, ...]
    k: int

    @classmethod
    def from_labels(cls, raw: Iterable[int]) -> "VertexPartition":
        labels, k = canonical_labels(raw)
        return cls(labels, k)

    @property
    def n(self) -> int:
        return len(self.labels)

    def class_of(self, v: int) -> int:
        return self.labels[v]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.labels):
            out[c - 1].append(v)
        return out

    def sizes(self) -> list[int]:
        counts = [0] * self.k
        for c in self.labels:
            counts[c - 1] += 1
        return counts

    def trivial_count(self) -> int:
        return sum(1 for s in self.sizes() if s == 1)

    def same_class(self, u: int, v: int) -> bool:
        return self.labels[u] == self.labels[v]

    def refines(self, other: "VertexPartition") -> bool:
        """True if every class of self lies inside one class of other."""
        seen: dict[int, int] = {}
        for mine, theirs in zip(self.labels, other.labels):
            if mine in seen:
                if seen[mine] != theirs:
                    return False
            else:
                seen[mine] = theirs
        return True

    def check(self) -> None:
        """Assert the partition invariants (total, gap-free 1..k)."""
        if self.k and (min(self.labels) != 1 or max(self.labels) != self.k):
            raise AssertionError("labels not in 1..k")
        if len(set(self.labels)) != self.k:
            raise AssertionError("gap in class ids")


@dataclass(frozen=True)
class MemberPartition:
    """Shared shape for edge/arc partitions: class ids aligned with members."""

    members: tuple[tuple[int, int], ...]
    labels: tuple[int, ...]
    k: int
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    @classmethod
    def from_labels(cls, members: Sequence[tuple[int, int]], raw: Iterable[int]):
        labels, k = canonical_labels(raw)
        return cls(tuple(members), labels, k)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {m: i for i, m in enumerate(self.members)}
        )

    def _key(self, member: tuple[int, int]) -> tuple[int, int]:
        return member

    @property
    def m(self) -> int:
        return len(self.members)

    def class_of(self, member: tuple[int, int]) -> int:
        return self.labels[self._index[self._key(member)]]

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.k)]
        for member, c in zip(self.members, self.labels):
            out[c - 1].append(member)
        return out

    def sizes(self) -> list[int]:
        counts = [0] * self.k
        for c in self.labels:
            counts[c - 1] += 1
        return counts

    def trivial_count(self) -> int:
        return sum(1 for s in self.sizes() if s == 1)

    def same_class(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return self.class_of(a) == self.class_of(b)

    def check(self) -> None:
        if self.k and (min(self.labels) != 1 or max(self.labels) != self.k):
            raise AssertionError("labels not in 1..k")
        if len(set(self.labels)) != self.k:
            raise AssertionError("gap in class ids")


class EdgePartition(MemberPartition):
    """Partition of undirected edges; lookups accept either endpoint order."""

    def _key(self, member):
        u, v = member
        return (u, v) if u < v else (v, u)


class ArcPartition(MemberPartition):
    """Partition of arcs; member order matters."""
