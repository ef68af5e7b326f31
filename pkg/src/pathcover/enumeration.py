"""Exhaustive generation of non-isomorphic graphs and maximality catalogs."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from .canon import CANON_MAX, canonical_form
from .errors import ArgumentError, PathCoverError, SizeError
from .graph import Graph, from_graph6, to_graph6

if TYPE_CHECKING:
    from .maximality import Classification, Decomposition

ENUM_MAX = 8

# Known numbers of isomorphism classes of graphs on n = 1..8 vertices.
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("@",)
    found: set[str] = set()
    top = 1 << (n - 1)
    for code in _classes(n - 1):
        parent = from_graph6(code)
        degs = parent.degrees()
        for nbrs in range(top):
            # Every graph arises by adding a vertex of minimum degree to one
            # of the smaller classes, so other additions are redundant.
            d = nbrs.bit_count()
            if any(degs[v] + (nbrs >> v & 1) < d for v in range(n - 1)):
                continue
            adj = tuple(row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(parent.adj))
            found.add(canonical_form(Graph(n, adj + (nbrs,))))
    return tuple(sorted(found))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-string order."""
    if n < 1:
        raise ArgumentError(f"order must be positive, got {n}")
    if n > ENUM_MAX:
        raise SizeError(
            f"internal enumeration stops at n={ENUM_MAX}; "
            "feed larger corpora as a graph6 stream from an external generator"
        )
    for code in _classes(n):
        g = from_graph6(code)
        if not connected_only or g.is_connected():
            yield g


def enumerate_up_to(max_n: int, connected_only: bool = False, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, connected_only)


def canonical_key(g: Graph) -> str:
    """Isomorphism-invariant sort key; falls back to the labelled string above the canon cap."""
    if g.n <= CANON_MAX:
        return canonical_form(g)
    return "~" + to_graph6(g)


# -- catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    canonical: str
    n: int
    classification: "Classification"
    decomposition: "Decomposition | None" = None

    def to_json(self) -> dict:
        return {
            "canonical": self.canonical,
            "n": self.n,
            "classification": self.classification.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
        }


def parse_filter(text: str) -> tuple[str, int | None]:
    """``all``, ``M``, ``N``, ``M<t>`` or ``N<t>`` (also ``M_t``) -> (family, t)."""
    spec = text.strip().replace("_", "")
    if spec.lower() == "all":
        return "all", None
    if spec[:1] in ("M", "N"):
        rest = spec[1:]
        if not rest:
            return spec[0], None
        if rest.isdigit():
            return spec[0], int(rest)
    raise ArgumentError(f"unknown filter {text!r}; use all, M, N, M<t> or N<t>")


def _tag(exc: Exception, key: str) -> None:
    if exc.args:
        exc.args = (f"{exc.args[0]} [graph {key}]",) + exc.args[1:]


def build_catalog(
    source: Iterable[Graph], want: str = "all", t_filter: int | None = None
) -> list[CatalogEntry]:
    """Classify each graph and keep those in the requested family.

    ``want`` is ``"all"``, ``"M"`` (maximal) or ``"N"`` (trim maximal);
    ``t_filter`` restricts ``mu_check``.  Maximal entries with ``t >= 1``
    carry their decomposition.
    """
    from .maximality import classify, decompose

    if want not in ("all", "M", "N"):
        raise ArgumentError(f"unknown class filter {want!r}")
    out = []
    for g in source:
        key = canonical_key(g)
        try:
            c = classify(g)
        except PathCoverError as exc:
            _tag(exc, key)
            raise
        if t_filter is not None and c.t != t_filter:
            continue
        if want == "M" and not c.in_M_t or want == "N" and not c.in_N_t:
            continue
        dec = None
        if c.in_M_t and c.t >= 1:
            try:
                dec = decompose(g, c)
            except PathCoverError as exc:
                _tag(exc, key)
                raise
        out.append(CatalogEntry(key, g.n, c, dec))
    return out
