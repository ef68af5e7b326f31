"""Immutable simple graphs on vertices ``0..n-1`` stored as adjacency bit masks.

All constructors and operations are pure; a :class:`Graph` never changes after
it is built.  Binary operations put the left operand's vertices first, so
``join(G, H)`` keeps ``G`` on ``0..n_G-1`` and shifts ``H`` to
``n_G..n_G+n_H-1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import reduce

from .errors import ArgumentError, ParseError, SizeError

MAX_VERTICES = 24


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise SizeError(f"graph order must be in 1..{MAX_VERTICES}, got {n}")


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of some graph, as a bit mask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.mask >> self.n:
            raise ArgumentError(f"mask {self.mask:#x} has bits at or above n={self.n}")

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def to_list(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ArgumentError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ArgumentError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ArgumentError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ArgumentError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        """Edges of the complement, ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            missing = ~self.adj[u] & self.full_mask
            out.extend((u, v) for v in bits(missing >> (u + 1) << (u + 1)))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return component_mask(self, 0) == self.full_mask

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..k-1`` in the order given."""
        order = list(vertices)
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(order), tuple(adj))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (the complement of ``K_n``)."""
    _check_order(n)
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- algebra ----------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise SizeError(f"disjoint union would have {n} > {MAX_VERTICES} vertices")
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise SizeError(f"join would have {n} > {MAX_VERTICES} vertices")
    g_block = (1 << g.n) - 1
    h_block = ((1 << h.n) - 1) << g.n
    return Graph(
        n,
        tuple(row | h_block for row in g.adj) + tuple((row << g.n) | g_block for row in h.adj),
    )


def union_all(graphs: Iterable[Graph]) -> Graph:
    graphs = list(graphs)
    if not graphs:
        raise ArgumentError("union of no graphs")
    return reduce(disjoint_union, graphs)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ArgumentError(f"vertex out of range for n={g.n}: ({u}, {v})")
    if u == v:
        raise ArgumentError(f"cannot add loop at {u}")
    if g.has_edge(u, v):
        raise ArgumentError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ArgumentError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


# -- structure --------------------------------------------------------------


def universal_vertices(g: Graph) -> VertexSet:
    full = g.full_mask
    mask = 0
    for v, row in enumerate(g.adj):
        if row | (1 << v) == full:
            mask |= 1 << v
    return VertexSet(mask, g.n)


def component_mask(g: Graph, v: int, within: int | None = None) -> int:
    """Vertex mask of the component containing ``v`` in the subgraph induced by ``within``."""
    within = g.full_mask if within is None else within
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as ``(subgraph, labels)`` where ``labels[i]`` is the original vertex.

    Components are ordered by their smallest original vertex.  ``within``
    restricts attention to an induced subgraph.
    """
    left = g.full_mask if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = component_mask(g, v, left)
        labels = tuple(bits(comp))
        out.append((g.induced(labels), labels))
        left &= ~comp
    return out


# -- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 (no header, no newline)."""
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record; surrounding whitespace and a ``>>graph6<<`` header are allowed."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII byte", exc.start) from None
    lead = len(text) - len(text.lstrip())
    body = text.strip()
    pos = lead
    if body.startswith(_HEADER):
        body = body[len(_HEADER):]
        pos += len(_HEADER)
    if not body:
        raise ParseError("empty graph6 record", pos)
    codes = [ord(c) - 63 for c in body]
    for k, c in enumerate(codes):
        if not 0 <= c <= 63:
            raise ParseError(f"byte {body[k]!r} outside the graph6 range", pos + k)

    if codes[0] < 63:
        n, k = codes[0], 1
    else:
        if len(codes) < 4:
            raise ParseError("truncated long-form vertex count", pos + len(codes))
        if codes[1] == 63:
            raise SizeError(f"graph6 order above 258047 is beyond the {MAX_VERTICES}-vertex cap")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        k = 4
    if n == 0:
        raise ParseError("graph with zero vertices", pos)
    if n > MAX_VERTICES:
        raise SizeError(f"graph6 record has {n} vertices; cap is {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = codes[k:]
    if len(data) < nbytes:
        raise ParseError(f"truncated adjacency data: need {nbytes} bytes, got {len(data)}",
                         pos + len(codes))
    if len(data) > nbytes:
        raise ParseError("trailing bytes after adjacency data", pos + k + nbytes)

    pad = nbytes * 6 - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise ParseError("non-zero padding bits", pos + k + nbytes - 1)

    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte, off = divmod(idx, 6)
            if data[byte] >> (5 - off) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream with one graph6 record per line, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield from_graph6(line)


# -- DOT --------------------------------------------------------------------


def to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "G") -> str:
    labels = labels or {}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels.get(v, str(v)).replace('"', r"\"")
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
