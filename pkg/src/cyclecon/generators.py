"""Seeded random graph generators for benchmarks and test corpora."""

from __future__ import annotations

import numpy as np

from .graphs import DirectedGraph, UndirectedGraph, build_directed, build_undirected


def random_graph(n: int, m: int, seed=None) -> UndirectedGraph:
    """Uniform simple graph with exactly m edges."""
    rng = np.random.default_rng(seed)
    max_m = n * (n - 1) // 2
    if m > max_m:
        raise ValueError(f"m={m} exceeds C({n},2)={max_m}")
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        need = m - len(chosen)
        us = rng.integers(0, n, size=2 * need + 8)
        vs = rng.integers(0, n, size=2 * need + 8)
        for u, v in zip(us, vs):
            if u == v:
                continue
            e = (int(u), int(v)) if u < v else (int(v), int(u))
            chosen.add(e)
            if len(chosen) == m:
                break
    return build_undirected(n, sorted(chosen))


def random_gnp(n: int, p: float, seed=None) -> UndirectedGraph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        hits = np.nonzero(rng.random(n - u - 1) < p)[0]
        edges.extend((u, u + 1 + int(h)) for h in hits)
    return build_undirected(n, edges)


def random_digraph(n: int, m: int, seed=None) -> DirectedGraph:
    """Uniform simple loop-free digraph with exactly m arcs."""
    rng = np.random.default_rng(seed)
    max_m = n * (n - 1)
    if m > max_m:
        raise ValueError(f"m={m} exceeds n(n-1)={max_m}")
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        need = m - len(chosen)
        us = rng.integers(0, n, size=2 * need + 8)
        vs = rng.integers(0, n, size=2 * need + 8)
        for u, v in zip(us, vs):
            if u == v:
                continue
            chosen.add((int(u), int(v)))
            if len(chosen) == m:
                break
    return build_directed(n, sorted(chosen))


def cyclic_kgonal_digraph(n: int, k: int, seed=None) -> DirectedGraph:
    """Weakly connected digraph in which every arc lies on a cycle of length <= k.

    Pastes random directed cycles of length 2..k together, each sharing a
    vertex with the part built so far, until all n vertices are covered.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if k < 2:
        raise ValueError("need k >= 2")
    rng = np.random.default_rng(seed)
    order = list(rng.permutation(n))
    covered = [order.pop()]
    arcs: set[tuple[int, int]] = set()
    while order:
        length = int(rng.integers(2, k + 1))
        anchor = covered[int(rng.integers(len(covered)))]
        fresh = []
        while len(fresh) < length - 1 and order:
            fresh.append(order.pop())
        cycle = [anchor] + fresh
        for i, x in enumerate(cycle):
            arcs.add((x, cycle[(i + 1) % len(cycle)]))
        covered.extend(fresh)
    return build_directed(n, sorted(arcs))
