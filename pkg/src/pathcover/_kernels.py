"""Subset dynamic programs over vertex masks, compiled with numba.

Both tables are indexed by a vertex mask ``m`` and use ``O(2^n)`` memory.

``cover_table`` computes, for every ``m``, the least number of vertex-disjoint
paths covering exactly ``m`` (``h[m]``) together with the set ``e0[m]`` of
vertices that can be the final vertex of the final path in some such cover.
The state ``(m, w)`` of the usual "open path ends at w" program only ever
takes the values ``h[m - w]`` (extend) or ``h[m - w] + 1`` (open a new path),
so storing ``h`` and ``e0`` is enough to run the transitions and to backtrack.

With ``start >= 0`` the first path is forced to begin at ``start``; masks not
containing ``start`` are left unreachable (``h == UNREACHABLE``).
"""

import numpy as np
from numba import njit

UNREACHABLE = 255


@njit(cache=True, nogil=True)
def cover_table(adj, n, start):
    size = 1 << n
    h = np.full(size, UNREACHABLE, dtype=np.uint8)
    e0 = np.zeros(size, dtype=np.uint32)
    h[0] = 0
    for m in range(1, size):
        if start >= 0 and not (m >> start) & 1:
            continue
        best = np.int64(UNREACHABLE)
        ends = 0
        for w in range(n):
            if not (m >> w) & 1:
                continue
            p = m ^ (1 << w)
            if start >= 0:
                if p == 0:
                    if w != start:
                        continue
                elif w == start:
                    continue
            val = np.int64(h[p])
            if not adj[w] & e0[p]:
                val += 1
            if val < best:
                best = val
                ends = 1 << w
            elif val == best:
                ends |= 1 << w
        h[m] = best
        e0[m] = ends
    return h, e0


@njit(cache=True, nogil=True)
def min_cover_size(adj, n):
    """``h[full]`` of :func:`cover_table` without keeping the ``e0`` bookkeeping alive."""
    h, _ = cover_table(adj, n, -1)
    return int(h[(1 << n) - 1])


@njit(cache=True, nogil=True)
def hamiltonian_path_ends(adj, n, start):
    """``ends[m]``: vertices ``w`` with a Hamiltonian path of ``G[m]`` from ``start`` to ``w``."""
    size = 1 << n
    ends = np.zeros(size, dtype=np.uint32)
    ends[1 << start] = 1 << start
    for m in range(1, size):
        if not (m >> start) & 1 or m == (1 << start):
            continue
        acc = 0
        for w in range(n):
            if w == start or not (m >> w) & 1:
                continue
            if ends[m ^ (1 << w)] & adj[w]:
                acc |= 1 << w
        ends[m] = acc
    return ends


@njit(cache=True, nogil=True)
def has_hamiltonian_cycle(adj, n):
    """Cycle through all ``n >= 3`` vertices, anchored at vertex 0."""
    ends = hamiltonian_path_ends(adj, n, 0)
    return (ends[(1 << n) - 1] & adj[0]) != 0


def as_array(adj):
    return np.asarray(adj, dtype=np.uint32)
