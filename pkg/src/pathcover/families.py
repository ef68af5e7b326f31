"""Generators for the whirligig, generalized whirligig, Skupien and Zelinka type I families.

Vertex order for the whirligig constructions: the clique vertices first
(``U_0``, then ``U_1 .. U_{2t-1}``), then the attached sets in ``(i, j)``
order.  Each generator validates its parameters and raises
:class:`~pathcover.errors.ParameterError` naming the violated constraint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ArgumentError, ParameterError
from .graph import MAX_VERTICES, Graph, complete_graph, join, union_all


@dataclass(frozen=True)
class WhirligigSpec:
    t: int
    m: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ParameterError(f"t must be >= 1, got {self.t}")
        if self.m < 2 * self.t - 1:
            raise ParameterError(f"need m >= 2t-1 = {2 * self.t - 1}, got m={self.m}")
        if self.order > MAX_VERTICES:
            raise ParameterError(f"m + 2t - 1 = {self.order} exceeds {MAX_VERTICES} vertices")

    @property
    def order(self) -> int:
        return self.m + 2 * self.t - 1


@dataclass(frozen=True)
class GeneralizedWhirligigSpec:
    """``groups[i-1] = (|U_i|, [|V_i1|, ..., |V_i m_i|])`` with ``m_i = |U_i|``."""

    t: int
    u0_size: int
    groups: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "groups", tuple((int(u), tuple(int(x) for x in vs)) for u, vs in self.groups)
        )
        if self.t < 1:
            raise ParameterError(f"t must be >= 1, got {self.t}")
        if self.u0_size < 0:
            raise ParameterError(f"|U_0| must be >= 0, got {self.u0_size}")
        if len(self.groups) != 2 * self.t - 1:
            raise ParameterError(
                f"need exactly 2t-1 = {2 * self.t - 1} groups, got {len(self.groups)}"
            )
        for i, (u_size, v_sizes) in enumerate(self.groups, start=1):
            if u_size < 1:
                raise ParameterError(f"group {i}: |U_{i}| must be >= 1, got {u_size}")
            if len(v_sizes) != u_size:
                raise ParameterError(
                    f"group {i}: needs one V set per vertex of U_{i} "
                    f"({u_size}), got {len(v_sizes)}"
                )
            for j, size in enumerate(v_sizes, start=1):
                if size < 1:
                    raise ParameterError(f"group {i}: |V_{i},{j}| must be >= 1, got {size}")
        if self.order > MAX_VERTICES:
            raise ParameterError(f"spec has {self.order} vertices; cap is {MAX_VERTICES}")

    @property
    def order(self) -> int:
        return self.u0_size + sum(u + sum(vs) for u, vs in self.groups)

    @classmethod
    def from_json(cls, t: int, u0: int, groups: list) -> GeneralizedWhirligigSpec:
        """Accept ``[[u_size, [v sizes...]], ...]`` as decoded from JSON."""
        try:
            parsed = tuple((int(u), tuple(vs)) for u, vs in groups)
        except (TypeError, ValueError) as exc:
            raise ParameterError(f"groups must be a list of [u_size, [v sizes]] pairs: {exc}")
        return cls(t, u0, parsed)


def whirligig(spec: WhirligigSpec) -> Graph:
    """``K_m`` plus ``2t-1`` pendants on distinct clique vertices.

    The ``m - (2t-1)`` clique vertices without a pendant play the role of
    ``U_0`` and come first, so this is label-identical to the generalized
    construction with every ``|U_i| = |V_i1| = 1``.
    """
    m, k = spec.m, 2 * spec.t - 1
    free = m - k
    edges = [(a, b) for a in range(m) for b in range(a + 1, m)]
    edges += [(free + i, m + i) for i in range(k)]
    return Graph.from_edges(spec.order, edges)


def generalized_whirligig(spec: GeneralizedWhirligigSpec) -> Graph:
    clique = spec.u0_size + sum(u for u, _ in spec.groups)
    edges = [(a, b) for a in range(clique) for b in range(a + 1, clique)]
    u_start = spec.u0_size
    nxt = clique
    for u_size, v_sizes in spec.groups:
        u_block = range(u_start, u_start + u_size)
        for size in v_sizes:
            v_block = range(nxt, nxt + size)
            edges += [(a, b) for a in v_block for b in v_block if a < b]
            edges += [(u, v) for u in u_block for v in v_block]
            nxt += size
        u_start += u_size
    return Graph.from_edges(spec.order, edges)


def _clique_union(sizes: list[int] | tuple[int, ...]) -> Graph:
    return union_all(complete_graph(a) for a in sizes)


def _check_clique_sizes(r: int, sizes, name: str) -> None:
    if r < 1:
        raise ParameterError(f"{name}: r must be >= 1, got {r}")
    if len(sizes) != r + 1:
        raise ParameterError(f"{name}: need r+1 = {r + 1} clique sizes, got {len(sizes)}")
    if any(a < 1 for a in sizes):
        raise ParameterError(f"{name}: clique sizes must be >= 1, got {list(sizes)}")


def skupien(r: int, sizes: list[int] | tuple[int, ...]) -> Graph:
    """``K_r * (K_{a_0} + ... + K_{a_r})``; maximal non-Hamiltonian."""
    _check_clique_sizes(r, sizes, "skupien")
    total = r + sum(sizes)
    if total > MAX_VERTICES:
        raise ParameterError(f"skupien: {total} vertices exceeds {MAX_VERTICES}")
    return join(complete_graph(r), _clique_union(sizes))


def zelinka_type1(r: int, sizes: list[int] | tuple[int, ...]) -> Graph:
    """``K_{r-1} * (K_{a_0} + ... + K_{a_r})``; maximal non-traceable."""
    _check_clique_sizes(r, sizes, "zelinka_type1")
    total = r - 1 + sum(sizes)
    if total > MAX_VERTICES:
        raise ParameterError(f"zelinka_type1: {total} vertices exceeds {MAX_VERTICES}")
    body = _clique_union(sizes)
    return body if r == 1 else join(complete_graph(r - 1), body)


# -- figures ----------------------------------------------------------------

_FIGURES: dict[str, tuple[list[str], list[tuple[int, int]]]] = {
    "fig1-net": (
        ["v1", "v2", "v3", "u1", "u2", "u3"],
        [(0, 3), (3, 4), (4, 5), (5, 3), (1, 4), (2, 5)],
    ),
    "fig2-a3core": (
        ["v1", "u1", "v2", "u2", "u3", "u4", "v3", "v4"],
        [(1, 3), (1, 4), (1, 5), (3, 4), (3, 5), (4, 5),
         (0, 1), (2, 3), (2, 4), (6, 3), (6, 4), (7, 5)],
    ),
    "fig3-whirligig": (
        ["u1", "u2", "u3", "u4", "u5", "v1", "v2", "v3", "v4", "v5"],
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (1, 2), (3, 4),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
    ),
}

FIGURE_NAMES = tuple(_FIGURES)


def named(name: str) -> Graph:
    """Labelled graphs transcribed from the figures' edge lists."""
    if name not in _FIGURES:
        raise ArgumentError(f"unknown figure {name!r}; choose from {', '.join(FIGURE_NAMES)}")
    names, edges = _FIGURES[name]
    return Graph.from_edges(len(names), edges)


def figure_labels(name: str) -> dict[int, str]:
    if name not in _FIGURES:
        raise ArgumentError(f"unknown figure {name!r}")
    return dict(enumerate(_FIGURES[name][0]))


# -- metadata ---------------------------------------------------------------


@dataclass(frozen=True)
class Expected:
    """What a generator claims about its output; tests recompute it independently.

    ``family`` is ``"N"`` (trim maximal), ``"M"`` (maximal, not trim), or
    ``None`` when the parameters give a graph outside every ``M_t``.
    """

    family: str | None
    t: int | None


def expected_whirligig(spec: WhirligigSpec) -> Expected:
    if spec.t >= 2:
        return Expected("N", spec.t)
    # t = 1: K_m with one pendant is K_2 (m = 1) or K_1 * (K_{m-1} + K_1).
    return Expected("M", 0) if spec.m == 1 else Expected("M", 1)


def expected_generalized(spec: GeneralizedWhirligigSpec) -> Expected:
    if spec.t >= 2:
        return Expected("N", spec.t)
    # t = 1 collapses to K_{|U_1|} * (K_{U_0} + K_{V_11} + ...): a Skupien graph
    # when U_0 is non-empty, otherwise a clique (|U_1| = 1) or Hamiltonian non-clique.
    u1, _ = spec.groups[0]
    if spec.u0_size:
        return Expected("M", 1)
    return Expected("M", 0) if u1 == 1 else Expected(None, 0)


def expected_skupien() -> Expected:
    return Expected("M", 1)


def expected_zelinka_type1() -> Expected:
    return Expected("M", 2)


# -- sampling ---------------------------------------------------------------


def random_generalized_spec(
    rng: random.Random, max_order: int = 18, ts: tuple[int, ...] = (2, 3, 4)
) -> GeneralizedWhirligigSpec:
    """Draw a valid spec with at most ``max_order`` vertices by rejection."""
    feasible = [t for t in ts if 2 * (2 * t - 1) <= max_order]
    if not feasible:
        raise ParameterError(f"no t in {ts} fits within {max_order} vertices")
    while True:
        t = rng.choice(feasible)
        u0 = rng.randint(0, 2)
        groups = []
        for _ in range(2 * t - 1):
            u = rng.choice((1, 1, 1, 2, 2, 3))
            groups.append((u, tuple(rng.choice((1, 1, 2, 3)) for _ in range(u))))
        order = u0 + sum(u + sum(vs) for u, vs in groups)
        if order <= max_order:
            return GeneralizedWhirligigSpec(t, u0, tuple(groups))


def skupien_parameters(max_order: int = 12):
    """All ``(r, sizes)`` with non-increasing sizes and ``r + sum(sizes) <= max_order``."""
    for r in range(1, max_order):
        for sizes in _partitions_with_parts(max_order - r, r + 1):
            yield r, sizes


def zelinka_parameters(max_order: int = 12):
    for r in range(1, max_order + 1):
        for sizes in _partitions_with_parts(max_order - r + 1, r + 1):
            yield r, sizes


def _partitions_with_parts(budget: int, parts: int, cap: int | None = None):
    """Non-increasing tuples of ``parts`` positive ints with sum <= ``budget``."""
    if parts == 0:
        yield ()
        return
    top = budget - (parts - 1)
    if cap is not None:
        top = min(top, cap)
    for first in range(top, 0, -1):
        for rest in _partitions_with_parts(budget - first, parts - 1, first):
            yield (first,) + rest
