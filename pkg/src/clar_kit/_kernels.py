"""Array kernels for the matching engine.

Graphs arrive in CSR form (``indptr``, ``indices``) over vertex ids ``0..n-1``
with an ``active`` mask; inactive vertices are treated as deleted.  Each kernel
is compiled with ``numba.njit`` unless ``CLAR_KIT_JIT=0`` is set or numba is
missing, in which case the identical Python source runs over the numpy arrays.
The undecorated function stays reachable as ``kernel.py_func`` either way.
"""

from __future__ import annotations

import numpy as np

from .config import jit_requested

try:
    import numba
except ImportError:  # pragma: no cover - numba ships with the environment
    numba = None

JIT_ENABLED = numba is not None and jit_requested()


def _kernel(fn):
    if JIT_ENABLED:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn


@_kernel
def hopcroft_karp(indptr, indices, left, active):
    """Maximum matching of the bipartite graph induced by ``active``.

    ``left`` flags one colour class.  Returns ``mate`` with ``mate[v] == -1``
    for unmatched (or inactive) vertices.
    """
    n = indptr.shape[0] - 1
    mate = np.full(n, -1, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    via = np.empty(n, np.int64)
    cursor = np.empty(n, np.int64)
    inf = n + 1
    while True:
        head = 0
        tail = 0
        for u in range(n):
            if active[u] and left[u]:
                if mate[u] == -1:
                    dist[u] = 0
                    queue[tail] = u
                    tail += 1
                else:
                    dist[u] = inf
        found = inf
        while head < tail:
            u = queue[head]
            head += 1
            if dist[u] >= found:
                continue
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if not active[v]:
                    continue
                w = mate[v]
                if w == -1:
                    if found == inf:
                        found = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if found == inf:
            break

        for root in range(n):
            if not (active[root] and left[root] and mate[root] == -1):
                continue
            top = 0
            stack[0] = root
            cursor[root] = indptr[root]
            while top >= 0:
                u = stack[top]
                moved = False
                while cursor[u] < indptr[u + 1]:
                    v = indices[cursor[u]]
                    cursor[u] += 1
                    if not active[v]:
                        continue
                    w = mate[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            via[top] = v
                            for i in range(top + 1):
                                mate[stack[i]] = via[i]
                                mate[via[i]] = stack[i]
                            top = -1
                            moved = True
                            break
                    elif dist[w] == dist[u] + 1:
                        via[top] = v
                        top += 1
                        stack[top] = w
                        cursor[w] = indptr[w]
                        moved = True
                        break
                if not moved:
                    dist[u] = inf
                    top -= 1
    return mate


@_kernel
def _first_uncovered(mate, active, start):
    for u in range(start, mate.shape[0]):
        if active[u] and mate[u] == -1:
            return u
    return -1


@_kernel
def enumerate_mates(indptr, indices, active, limit):
    """All perfect matchings of the graph induced by ``active``, as mate rows.

    Backtracks on the lowest uncovered vertex, trying its neighbours in CSR
    order, so the output order is deterministic.  Stops after ``limit`` rows;
    callers detect truncation by comparing the row count with ``limit``.
    """
    n = indptr.shape[0] - 1
    mate = np.full(n, -1, np.int64)
    rows = np.empty((16, n), np.int64)
    count = 0
    level_vertex = np.empty(n + 1, np.int64)
    level_cursor = np.empty(n + 1, np.int64)

    u0 = _first_uncovered(mate, active, 0)
    if u0 == -1:
        rows[0, :] = mate
        return rows[:1].copy()

    level = 0
    level_vertex[0] = u0
    level_cursor[0] = indptr[u0]
    while level >= 0 and count < limit:
        u = level_vertex[level]
        if mate[u] != -1:
            mate[mate[u]] = -1
            mate[u] = -1
        moved = False
        while level_cursor[level] < indptr[u + 1]:
            v = indices[level_cursor[level]]
            level_cursor[level] += 1
            if not active[v] or mate[v] != -1 or v == u:
                continue
            mate[u] = v
            mate[v] = u
            nxt = _first_uncovered(mate, active, u + 1)
            if nxt == -1:
                if count == rows.shape[0]:
                    grown = np.empty((2 * rows.shape[0], n), np.int64)
                    grown[:count] = rows[:count]
                    rows = grown
                rows[count, :] = mate
                count += 1
                mate[u] = -1
                mate[v] = -1
                if count >= limit:
                    break
                continue
            level += 1
            level_vertex[level] = nxt
            level_cursor[level] = indptr[nxt]
            moved = True
            break
        if not moved:
            level -= 1
    return rows[:count].copy()
