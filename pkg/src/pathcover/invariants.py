"""Path-cover invariants: ``mu``, ``mu_check``, the Hamiltonicity indicator and terminal vertices.

``mu(G)`` is the least number of vertex-disjoint paths covering ``G``;
``mu_check(G)`` is the least ``l`` for which ``K_l * G`` is Hamiltonian.
``K_1`` and ``K_2`` count as Hamiltonian.  The production route for
``mu_check`` is ``mu - i_h``; :func:`mu_check_direct` evaluates the defining
minimum by brute search for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .errors import ArgumentError, SizeError
from .graph import MAX_VERTICES, Graph, VertexSet, bits, complete_graph, empty_graph, join

BRUTE_MU_MAX = 10


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths; a single vertex is a path whose two ends coincide."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    def endpoints(self) -> set[int]:
        return {p[0] for p in self.paths} | {p[-1] for p in self.paths}

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a path cover of ``g``; empty when valid."""
        out = []
        seen: set[int] = set()
        for k, path in enumerate(self.paths):
            if not path:
                out.append(f"path {k} is empty")
            for v in path:
                if not 0 <= v < g.n:
                    out.append(f"path {k} has vertex {v} outside 0..{g.n - 1}")
                elif v in seen:
                    out.append(f"vertex {v} appears twice")
                seen.add(v)
            for a, b in zip(path, path[1:]):
                if 0 <= a < g.n and 0 <= b < g.n and not g.has_edge(a, b):
                    out.append(f"path {k} uses non-edge ({a}, {b})")
        missing = set(range(g.n)) - seen
        if missing:
            out.append(f"vertices not covered: {sorted(missing)}")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.paths]


@dataclass(frozen=True)
class InvariantReport:
    mu: int
    mu_check: int
    i_h: int
    terminal_feasible: VertexSet
    witness: PathCover

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "muCheck": self.mu_check,
            "iH": self.i_h,
            "terminalFeasible": self.terminal_feasible.to_list(),
            "witness": self.witness.to_json(),
        }


def _adj(g: Graph) -> np.ndarray:
    return _kernels.as_array(g.adj)


def is_hamiltonian(g: Graph) -> bool:
    if g.n == 1:
        return True
    if g.n == 2:
        return g.has_edge(0, 1)
    if min(g.degrees()) < 2:
        return False
    return bool(_kernels.has_hamiltonian_cycle(_adj(g), g.n))


def i_h(g: Graph) -> int:
    return int(is_hamiltonian(g))


def mu_value(g: Graph) -> int:
    """``mu(G)`` without building a witness."""
    return _kernels.min_cover_size(_adj(g), g.n)


def _backtrack(g: Graph, h: np.ndarray, e0: np.ndarray) -> PathCover:
    """The lexicographically smallest minimum cover, each path read from its smaller end.

    ``h[m]`` and ``e0[m]`` describe the subgraph induced by ``m``, so the
    greedy choice is exact: the first path starts at the smallest vertex
    that ends any minimum path, stops as soon as the rest needs one path
    fewer, and otherwise extends to the smallest neighbour that keeps the
    path count minimal.
    """
    rest = g.full_mask
    paths: list[tuple[int, ...]] = []
    while rest:
        k = int(h[rest])
        v = _lowest(int(e0[rest]))
        path = [v]
        rest ^= 1 << v
        while int(h[rest]) != k - 1:
            v = _lowest(g.adj[v] & rest & int(e0[rest]))
            path.append(v)
            rest ^= 1 << v
        paths.append(tuple(path))
    return PathCover(tuple(paths))


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def min_path_cover(g: Graph) -> PathCover:
    h, e0 = _kernels.cover_table(_adj(g), g.n, -1)
    return _backtrack(g, h, e0)


def mu(g: Graph) -> tuple[int, PathCover]:
    """Minimum number of paths covering ``g`` and a cover attaining it."""
    cover = min_path_cover(g)
    return len(cover), cover


def mu_check(g: Graph) -> int:
    return mu_check_adj(_adj(g), g.n)


def mu_check_adj(adj: np.ndarray, n: int) -> int:
    """``mu - i_h`` straight from an adjacency array; skips Graph construction in hot loops."""
    m = _kernels.min_cover_size(adj, n)
    # Only a traceable graph can be Hamiltonian.
    if m > 1:
        return m
    if n == 1:
        return 0
    if n == 2:
        return 0 if adj[0] else 1
    for row in adj:
        if int(row).bit_count() < 2:
            return 1
    return 0 if _kernels.has_hamiltonian_cycle(adj, n) else 1


def mu_check_direct(g: Graph, mode: Literal["clique", "independent"] = "clique") -> int:
    """Least ``l >= 0`` with ``B_l * G`` Hamiltonian, ``B_l`` being ``K_l`` or its complement."""
    if mode == "clique":
        block = complete_graph
    elif mode == "independent":
        block = empty_graph
    else:
        raise ArgumentError(f"unknown mode {mode!r}; expected 'clique' or 'independent'")
    for l in range(g.n + 1):
        if g.n + l > MAX_VERTICES:
            raise SizeError(f"search reached l={l}; the join would exceed {MAX_VERTICES} vertices")
        candidate = g if l == 0 else join(block(l), g)
        if is_hamiltonian(candidate):
            return l
    raise AssertionError("K_n * G is always Hamiltonian")  # pragma: no cover


def terminal_set(g: Graph) -> VertexSet:
    """All ``v`` that end a path of some minimum path cover."""
    _, e0 = _kernels.cover_table(_adj(g), g.n, -1)
    return VertexSet(int(e0[g.full_mask]), g.n)


def terminal_feasible(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise ArgumentError(f"vertex {v} out of range for n={g.n}")
    return v in terminal_set(g)


def terminal_pair_feasible(g: Graph, v: int, w: int) -> bool:
    """Whether some minimum path cover has both ``v`` and ``w`` as path ends.

    Two shapes are possible: ``v`` and ``w`` end different paths (order the
    cover so ``v`` opens the first path and ``w`` closes the last), or they
    are the two ends of one path ``S``, the rest being covered optimally.
    """
    for x in (v, w):
        if not 0 <= x < g.n:
            raise ArgumentError(f"vertex {x} out of range for n={g.n}")
    if v == w:
        raise ArgumentError("terminal_pair_feasible needs two distinct vertices")
    adj = _adj(g)
    h, _ = _kernels.cover_table(adj, g.n, -1)
    hv, e0v = _kernels.cover_table(adj, g.n, v)
    full = g.full_mask
    best = int(h[full])
    if int(hv[full]) == best and int(e0v[full]) >> w & 1:
        return True
    masks = np.arange(1 << g.n, dtype=np.int64)
    one_path = (hv == 1) & ((e0v >> np.uint32(w)) & 1).astype(bool)
    rest = h[full ^ masks].astype(np.int64)
    return bool(np.any(one_path & (rest == best - 1)))


def report(g: Graph) -> InvariantReport:
    adj = _adj(g)
    h, e0 = _kernels.cover_table(adj, g.n, -1)
    witness = _backtrack(g, h, e0)
    m = len(witness)
    ham = i_h(g) if m == 1 else 0
    return InvariantReport(
        mu=m,
        mu_check=m - ham,
        i_h=ham,
        terminal_feasible=VertexSet(int(e0[g.full_mask]), g.n),
        witness=witness,
    )


# -- independent oracle -----------------------------------------------------


def brute_mu(g: Graph) -> int:
    """Minimum path cover by exhaustive search over partitions of V into paths.

    Shares nothing with the dynamic program: it repeatedly takes the smallest
    uncovered vertex, enumerates every vertex set of a path through it in the
    uncovered subgraph, and recurses with branch-and-bound.
    """
    if g.n > BRUTE_MU_MAX:
        raise SizeError(f"brute_mu is limited to n <= {BRUTE_MU_MAX}, got {g.n}")
    nbrs = [set(bits(row)) for row in g.adj]
    best = g.n + 1

    def path_sets(x: int, free: frozenset[int]) -> set[frozenset[int]]:
        found: set[frozenset[int]] = set()

        def grow_left(used: frozenset[int], left: int) -> None:
            found.add(used)
            for y in nbrs[left]:
                if y in free and y not in used:
                    grow_left(used | {y}, y)

        def grow_right(used: frozenset[int], right: int) -> None:
            grow_left(used, x)
            for y in nbrs[right]:
                if y in free and y not in used:
                    grow_right(used | {y}, y)

        grow_right(frozenset([x]), x)
        return found

    def search(free: frozenset[int], count: int) -> None:
        nonlocal best
        if count >= best:
            return
        if not free:
            best = count
            return
        if count + 1 >= best:
            return
        x = min(free)
        for s in sorted(path_sets(x, free), key=len, reverse=True):
            search(free - s, count + 1)

    search(frozenset(range(g.n)), 0)
    return best
