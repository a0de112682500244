"""Numba-compiled per-edge kernels over CSR adjacency.

Mirrors the contracts of ``_kernels_py``: sorted neighbor rows, linear
merges, one pass per edge, so the whole sweep costs O(max_degree * m).
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _merge_count(indices, a_lo, a_hi, b_lo, b_hi):
    i = a_lo
    j = b_lo
    count = 0
    while i < a_hi and j < b_hi:
        a = indices[i]
        b = indices[j]
        if a == b:
            count += 1
            i += 1
            j += 1
        elif a < b:
            i += 1
        else:
            j += 1
    return count


@numba.njit(cache=True)
def intersect_sorted(a, b):
    out = np.empty(min(a.size, b.size), dtype=np.int64)
    i = 0
    j = 0
    t = 0
    while i < a.size and j < b.size:
        if a[i] == b[j]:
            out[t] = a[i]
            t += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out[:t]


@numba.njit(cache=True)
def triangle_weights(indptr, indices, edge_u, edge_v):
    m = edge_u.size
    w = np.zeros(m, dtype=np.int64)
    for e in range(m):
        u = edge_u[e]
        v = edge_v[e]
        w[e] = _merge_count(
            indices, indptr[u], indptr[u + 1], indptr[v], indptr[v + 1]
        )
    return w


@numba.njit(cache=True)
def k3_labels(indptr, indices):
    n = indptr.size - 1
    labels = np.full(n, -1, dtype=np.int64)
    queued = np.zeros(n, dtype=numba.boolean)
    queue = np.empty(n, dtype=np.int64)
    cls = 0
    for seed in range(n):
        if labels[seed] >= 0:
            continue
        head = 0
        tail = 0
        queue[tail] = seed
        tail += 1
        queued[seed] = True
        while head < tail:
            u = queue[head]
            head += 1
            labels[u] = cls
            for pu in range(indptr[u], indptr[u + 1]):
                v = indices[pu]
                i = indptr[u]
                j = indptr[v]
                iu_end = indptr[u + 1]
                iv_end = indptr[v + 1]
                in_triangle = False
                while i < iu_end and j < iv_end:
                    a = indices[i]
                    b = indices[j]
                    if a == b:
                        in_triangle = True
                        if not queued[a]:
                            queued[a] = True
                            queue[tail] = a
                            tail += 1
                        i += 1
                        j += 1
                    elif a < b:
                        i += 1
                    else:
                        j += 1
                if in_triangle and not queued[v]:
                    queued[v] = True
                    queue[tail] = v
                    tail += 1
        cls += 1
    return labels


@numba.njit(cache=True)
def l3_labels(indptr, indices, csr_eids, edge_u, edge_v):
    m = edge_u.size
    labels = np.full(m, -1, dtype=np.int64)
    queued = np.zeros(m, dtype=numba.boolean)
    queue = np.empty(m, dtype=np.int64)
    cls = 0
    for seed in range(m):
        if labels[seed] >= 0:
            continue
        head = 0
        tail = 0
        queue[tail] = seed
        tail += 1
        queued[seed] = True
        while head < tail:
            e = queue[head]
            head += 1
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
                    f = csr_eids[i]
                    g = csr_eids[j]
                    if not queued[f]:
                        queued[f] = True
                        queue[tail] = f
                        tail += 1
                    if not queued[g]:
                        queued[g] = True
                        queue[tail] = g
                        tail += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        cls += 1
    return labels


@numba.njit(cache=True)
def directed_triangle_counts(out_indptr, out_indices, in_indptr, in_indices,
                             arc_u, arc_v):
    na = arc_u.size
    cyc = np.zeros(na, dtype=np.int64)
    tra = np.zeros(na, dtype=np.int64)
    inp = np.zeros(na, dtype=np.int64)
    out = np.zeros(na, dtype=np.int64)
    for a in range(na):
        u = arc_u[a]
        v = arc_v[a]
        cyc[a] = _merge_count2(
            out_indices, out_indptr[v], out_indptr[v + 1],
            in_indices, in_indptr[u], in_indptr[u + 1],
        )
        tra[a] = _merge_count2(
            out_indices, out_indptr[u], out_indptr[u + 1],
            in_indices, in_indptr[v], in_indptr[v + 1],
        )
        inp[a] = _merge_count2(
            in_indices, in_indptr[u], in_indptr[u + 1],
            in_indices, in_indptr[v], in_indptr[v + 1],
        )
        out[a] = _merge_count2(
            out_indices, out_indptr[u], out_indptr[u + 1],
            out_indices, out_indptr[v], out_indptr[v + 1],
        )
    return cyc, tra, inp, out


@numba.njit(cache=True)
def _merge_count2(xs, x_lo, x_hi, ys, y_lo, y_hi):
    i = x_lo
    j = y_lo
    count = 0
    while i < x_hi and j < y_hi:
        a = xs[i]
        b = ys[j]
        if a == b:
            count += 1
            i += 1
            j += 1
        elif a < b:
            i += 1
        else:
            j += 1
    return count
