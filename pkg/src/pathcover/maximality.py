"""Maximal t-path traceable graphs: classification, decomposition and its inverse.

A graph is in ``M_t`` when ``mu_check(G) == t`` and adding any missing edge
lowers ``mu_check``; it is trim (``N_t``) when additionally connected and
free of universal vertices.  Every ``G`` in ``M_t`` with ``t > 0`` splits as
``K_s * (G_1 + ... + G_r)`` where ``s`` counts the universal vertices and each
``G_j`` is complete or trim.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .enumeration import canonical_key
from .errors import ArgumentError, ConsistencyError, DomainError, SizeError
from .graph import (
    MAX_VERTICES,
    Graph,
    complete_graph,
    components,
    join,
    to_graph6,
    union_all,
    universal_vertices,
)
from .invariants import i_h, mu_check, mu_check_adj


@dataclass(frozen=True)
class Classification:
    t: int
    in_M_t: bool
    connected: bool
    has_universal: bool
    in_N_t: bool

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "inMt": self.in_M_t,
            "connected": self.connected,
            "hasUniversal": self.has_universal,
            "inNt": self.in_N_t,
        }


def is_maximal(g: Graph, t: int | None = None) -> bool:
    """Whether every missing edge lowers ``mu_check``; stops at the first edge that does not."""
    if t is None:
        t = mu_check(g)
    adj = _kernels.as_array(g.adj)
    for u, v in g.non_edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        lowered = mu_check_adj(adj, g.n) < t
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        if not lowered:
            return False
    return True


def classify(g: Graph) -> Classification:
    t = mu_check(g)
    in_m = is_maximal(g, t)
    connected = g.is_connected()
    has_universal = len(universal_vertices(g)) > 0
    return Classification(
        t=t,
        in_M_t=in_m,
        connected=connected,
        has_universal=has_universal,
        in_N_t=in_m and connected and not has_universal,
    )


class PartKind(str, Enum):
    COMPLETE = "complete"
    TRIM = "trim"


@dataclass(frozen=True)
class DecompositionPart:
    graph: Graph
    kind: PartKind
    t: int
    i_h: int
    labels: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "kind": self.kind.value,
            "t": self.t,
            "iH": self.i_h,
            "vertices": list(self.labels),
        }


@dataclass(frozen=True)
class Decomposition:
    s: int
    parts: tuple[DecompositionPart, ...]
    t: int
    universal: tuple[int, ...] = ()

    @property
    def r(self) -> int:
        return len(self.parts)

    def formula_value(self) -> int:
        return sum(p.t for p in self.parts) + sum(p.i_h for p in self.parts) - self.s

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "universal": list(self.universal),
            "parts": [p.to_json() for p in self.parts],
        }


def decompose(g: Graph, classification: Classification | None = None) -> Decomposition:
    c = classification or classify(g)
    if not c.in_M_t:
        raise DomainError(f"not maximal: no decomposition for a graph outside M_{c.t}")
    if c.t == 0:
        raise DomainError("t=0: the decomposition needs t > 0 (complete graphs are excluded)")

    universal = universal_vertices(g)
    parts = []
    for comp, labels in components(g, within=g.full_mask & ~universal.mask):
        t_j = mu_check(comp)
        ih_j = i_h(comp)
        if comp.is_complete():
            kind = PartKind.COMPLETE
        else:
            sub = classify(comp)
            if not sub.in_N_t:
                raise ConsistencyError(
                    f"component on vertices {list(labels)} is neither complete nor trim maximal"
                )
            kind = PartKind.TRIM
        parts.append(DecompositionPart(comp, kind, t_j, ih_j, labels))
    parts.sort(key=lambda p: (canonical_key(p.graph), p.labels))

    dec = Decomposition(len(universal), tuple(parts), c.t, tuple(universal))
    if dec.formula_value() != c.t:
        raise ConsistencyError(
            f"sum of part invariants minus s gives {dec.formula_value()}, but mu_check is {c.t}"
        )
    return dec


def compose(s: int, parts: list[Graph] | tuple[Graph, ...]) -> Graph:
    """``K_s * (parts[0] + parts[1] + ...)``, clique block labelled first."""
    if s < 0:
        raise ArgumentError(f"s must be non-negative, got {s}")
    total = s + sum(p.n for p in parts)
    if total == 0:
        raise ArgumentError("compose needs s > 0 or at least one part")
    if total > MAX_VERTICES:
        raise SizeError(f"composed graph would have {total} > {MAX_VERTICES} vertices")
    if not parts:
        return complete_graph(s)
    body = union_all(parts)
    return body if s == 0 else join(complete_graph(s), body)


def predicted_mu_check(s: int, parts: list[Graph] | tuple[Graph, ...]) -> int:
    """Closed-form ``mu_check(compose(s, parts))`` from the parts' own invariants.

    With two or more parts the union is never Hamiltonian, so each part
    contributes ``mu_check + i_h``.  A single part is just ``K_s * G``,
    which gives ``max(0, mu_check(G) - s)``.
    """
    if not parts:
        if s <= 0:
            raise ArgumentError("compose needs s > 0 or at least one part")
        return 0
    if len(parts) == 1:
        return max(0, mu_check(parts[0]) - s)
    return max(0, sum(mu_check(p) + i_h(p) for p in parts) - s)
