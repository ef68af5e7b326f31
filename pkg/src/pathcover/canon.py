"""Canonical labelling by colour refinement plus individualisation search.

The canonical form is the graph6 string of the labelling whose upper-triangle
bit string is smallest among the leaves of the search tree.  Refinement and
the choice of target cell depend only on isomorphism-invariant data, so two
graphs get equal forms exactly when they are isomorphic.  Automorphisms found
at leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

from .errors import SizeError
from .graph import Graph, to_graph6

CANON_MAX = 12


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[sig] for sig in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_roots(n: int, generators: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_order(g: Graph) -> list[int]:
    """Vertices listed in canonical position order."""
    if g.n > CANON_MAX:
        raise SizeError(f"canonical form is limited to n <= {CANON_MAX}, got {g.n}")
    adj = g.adj
    n = g.n
    best_code = -1
    best_order: list[int] = []
    seen: dict[int, list[int]] = {}
    automorphisms: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        nonlocal best_code, best_order
        code = _code(adj, order)
        if code in seen:
            first = seen[code]
            gamma = [0] * n
            for a, b in zip(first, order):
                gamma[a] = b
            automorphisms.append(tuple(gamma))
        else:
            seen[code] = order
        if best_code < 0 or code < best_code:
            best_code, best_order = code, order

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[t]
        tried: list[int] = []
        for v in target:
            if tried and automorphisms:
                # Orbits grow as leaves reveal automorphisms, so recompute per candidate.
                fixing = [a for a in automorphisms if all(a[x] == x for x in prefix)]
                roots = _orbit_roots(n, fixing)
                if any(roots[u] == roots[v] for u in tried):
                    continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:], prefix + [v])

    search([list(range(n))], [])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    return to_graph6(canonical_graph(g))
