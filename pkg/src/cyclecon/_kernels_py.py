"""Pure numpy fallback implementations of the hot per-edge kernels.

Same contracts as the numba versions in ``_kernels_numba``; these exist so
the package runs without a JIT and so the two paths can be benchmarked
against each other.  Raw labels are 0-based and not canonical; callers
renumber.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def intersect_sorted(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.intersect1d(a, b, assume_unique=True)


def triangle_weights(indptr, indices, edge_u, edge_v):
    m = edge_u.size
    w = np.zeros(m, dtype=np.int64)
    for e in range(m):
        u = edge_u[e]
        v = edge_v[e]
        nu = indices[indptr[u]:indptr[u + 1]]
        nv = indices[indptr[v]:indptr[v + 1]]
        w[e] = np.intersect1d(nu, nv, assume_unique=True).size
    return w


def k3_labels(indptr, indices, order_seed=None):
    """Worklist sweep assigning each vertex to its triangle-connectivity class.

    order_seed draws the next worklist element at random instead of FIFO;
    the resulting classes must not depend on it.
    """
    n = indptr.size - 1
    labels = np.full(n, -1, dtype=np.int64)
    queued = np.zeros(n, dtype=bool)
    rng = None if order_seed is None else np.random.default_rng(order_seed)
    cls = 0
    for seed in range(n):
        if labels[seed] >= 0:
            continue
        work = deque([seed])
        queued[seed] = True
        while work:
            if rng is None:
                u = work.popleft()
            else:
                i = rng.integers(len(work))
                work.rotate(-int(i))
                u = work.popleft()
                work.rotate(int(i))
            labels[u] = cls
            nu = indices[indptr[u]:indptr[u + 1]]
            for v in nu:
                common = np.intersect1d(
                    nu, indices[indptr[v]:indptr[v + 1]], assume_unique=True
                )
                if common.size == 0:
                    continue
                for w in common:
                    if not queued[w]:
                        queued[w] = True
                        work.append(int(w))
                if not queued[v]:
                    queued[v] = True
                    work.append(int(v))
        cls += 1
    return labels


def l3_labels(indptr, indices, csr_eids, edge_u, edge_v, order_seed=None):
    """Edge worklist sweep for edge triangle-connectivity classes.

    An edge never re-enters the worklist once queued, which realizes the
    dynamic edge removal of the construction with tombstone flags.
    """
    m = edge_u.size
    labels = np.full(m, -1, dtype=np.int64)
    queued = np.zeros(m, dtype=bool)
    rng = None if order_seed is None else np.random.default_rng(order_seed)
    cls = 0
    for seed in range(m):
        if labels[seed] >= 0:
            continue
        work = deque([seed])
        queued[seed] = True
        while work:
            if rng is None:
                e = work.popleft()
            else:
                i = rng.integers(len(work))
                work.rotate(-int(i))
                e = work.popleft()
                work.rotate(int(i))
            labels[e] = cls
            u = edge_u[e]
            v = edge_v[e]
            i = indptr[u]
            j = indptr[v]
            iu_end = indptr[u + 1]
            iv_end = indptr[v + 1]
            while i < iu_end and j < iv_end:
                a = indices[i]
                b = indices[j]
                if a == b:
                    for f in (csr_eids[i], csr_eids[j]):
                        if not queued[f]:
                            queued[f] = True
                            work.append(int(f))
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        cls += 1
    return labels


def directed_triangle_counts(out_indptr, out_indices, in_indptr, in_indices,
                             arc_u, arc_v):
    na = arc_u.size
    cyc = np.zeros(na, dtype=np.int64)
    tra = np.zeros(na, dtype=np.int64)
    inp = np.zeros(na, dtype=np.int64)
    out = np.zeros(na, dtype=np.int64)

    def row(indptr, indices, x):
        return indices[indptr[x]:indptr[x + 1]]

    for a in range(na):
        u = arc_u[a]
        v = arc_v[a]
        out_u = row(out_indptr, out_indices, u)
        out_v = row(out_indptr, out_indices, v)
        in_u = row(in_indptr, in_indices, u)
        in_v = row(in_indptr, in_indices, v)
        cyc[a] = np.intersect1d(out_v, in_u, assume_unique=True).size
        tra[a] = np.intersect1d(out_u, in_v, assume_unique=True).size
        inp[a] = np.intersect1d(in_u, in_v, assume_unique=True).size
        out[a] = np.intersect1d(out_u, out_v, assume_unique=True).size
    return cyc, tra, inp, out
