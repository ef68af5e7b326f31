"""Verification campaigns: each one checks a single identity on every graph of a corpus.

A campaign never stops at the first failure; it collects every
counterexample into a :class:`CampaignReport`.  Sampled corpora are seeded
and the seed is recorded in the report.  ``PATHCOVER_THREADS`` (default 1)
caps the worker threads used to evaluate corpus elements; results are
aggregated in corpus order, so reports do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import os
import random
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any

from .canon import canonical_form
from .enumeration import enumerate_up_to
from .errors import ArgumentError, PathCoverError
from .families import (
    WhirligigSpec,
    expected_generalized,
    expected_whirligig,
    generalized_whirligig,
    random_generalized_spec,
    skupien,
    skupien_parameters,
    whirligig,
    zelinka_parameters,
    zelinka_type1,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    add_edge,
    complete_graph,
    disjoint_union,
    join,
    to_graph6,
    union_all,
    universal_vertices,
)
from .invariants import (
    brute_mu,
    i_h,
    mu,
    mu_check,
    mu_check_direct,
    mu_value,
    terminal_pair_feasible,
    terminal_set,
)
from .maximality import Classification, classify, compose, decompose, predicted_mu_check


@dataclass
class Counterexample:
    inputs: list[str]
    observed: Any
    expected: Any
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "inputs": self.inputs,
            "observed": self.observed,
            "expected": self.expected,
            "detail": self.detail,
        }


@dataclass
class CampaignReport:
    campaign_id: str
    corpus: dict
    checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "campaign": self.campaign_id,
            "corpus": self.corpus,
            "checked": self.checked,
            "success": self.success,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }


@dataclass(frozen=True)
class Bounds:
    """Corpus parameters; ``None`` fields take the campaign's default.

    ``graphs`` replaces the enumerated corpus with an explicit one (e.g. a
    graph6 stream) for the campaigns that take single graphs.
    """

    max_n: int | None = None
    connected_only: bool | None = None
    seed: int | None = None
    samples: int | None = None
    max_s: int | None = None
    graphs: tuple[Graph, ...] | None = None

    def with_defaults(self, **defaults: Any) -> Bounds:
        filled = {k: v for k, v in defaults.items() if getattr(self, k) is None}
        return replace(self, **filled)


# -- helpers ----------------------------------------------------------------


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PATHCOVER_THREADS", "1")))
    except ValueError:
        return 1


def _run(check: Callable[[Any], list[Counterexample]], items: Sequence[Any]) -> list[Counterexample]:
    workers = _threads()
    if workers == 1 or len(items) < 2:
        results = map(check, items)
    else:
        # Kernels release the GIL; map preserves input order.
        pool = ThreadPoolExecutor(max_workers=workers)
        with pool:
            results = list(pool.map(check, items))
    return [c for batch in results for c in batch]


@lru_cache(maxsize=None)
def cached_classify(g: Graph) -> Classification:
    return classify(g)


@lru_cache(maxsize=None)
def _corpus(max_n: int, connected_only: bool) -> tuple[Graph, ...]:
    return tuple(enumerate_up_to(max_n, connected_only))


@lru_cache(maxsize=None)
def maximal_graphs(max_n: int, min_t: int = 0) -> tuple[Graph, ...]:
    out = []
    for g in _corpus(max_n, False):
        c = cached_classify(g)
        if c.in_M_t and c.t >= min_t:
            out.append(g)
    return tuple(out)


def _g6(*graphs: Graph) -> list[str]:
    return [to_graph6(g) for g in graphs]


def _graphs(b: Bounds) -> tuple[Graph, ...]:
    if b.graphs is not None:
        return b.graphs
    return _corpus(b.max_n, bool(b.connected_only))


def _describe(b: Bounds, **extra: Any) -> dict:
    out: dict[str, Any] = {}
    if b.graphs is not None:
        out["source"] = "explicit"
        out["size"] = len(b.graphs)
    else:
        out["source"] = "enumerated"
        out["maxN"] = b.max_n
        out["connectedOnly"] = bool(b.connected_only)
    for key in ("seed", "samples", "max_s"):
        value = getattr(b, key)
        if value is not None:
            out[key] = value
    out.update(extra)
    return out


# -- campaigns --------------------------------------------------------------


def _oracle(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=7, connected_only=False)
    items = _graphs(b)

    def check(g: Graph) -> list[Counterexample]:
        value, cover = mu(g)
        oracle = brute_mu(g)
        out = []
        if value != oracle:
            out.append(Counterexample(_g6(g), value, oracle, "mu disagrees with brute_mu"))
        problems = cover.problems(g)
        if problems or len(cover) != value:
            out.append(Counterexample(_g6(g), cover.to_json(), value, "; ".join(problems)))
        return out

    return CampaignReport("ORACLE", _describe(b), len(items), _run(check, items))


def _ami(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=6, connected_only=False)
    items = _graphs(b)

    def check(g: Graph) -> list[Counterexample]:
        formula = mu_value(g) - i_h(g)
        direct = mu_check_direct(g, "clique")
        if formula != direct:
            return [Counterexample(_g6(g), formula, direct, "mu - i_H vs least clique join")]
        return []

    return CampaignReport("AMI", _describe(b), len(items), _run(check, items))


def _alpha(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=6, connected_only=False)
    items = _graphs(b)

    def check(g: Graph) -> list[Counterexample]:
        clique = mu_check_direct(g, "clique")
        indep = mu_check_direct(g, "independent")
        formula = mu_check(g)
        if not clique == indep == formula:
            return [Counterexample(
                _g6(g), {"independent": indep}, {"clique": clique, "formula": formula},
                "independent-set join disagrees",
            )]
        return []

    return CampaignReport("ALPHA", _describe(b), len(items), _run(check, items))


def _pairs(graphs: Sequence[Graph]) -> list[tuple[Graph, Graph]]:
    return list(itertools.combinations_with_replacement(graphs, 2))


def _disj(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=5, connected_only=False)
    items = _pairs(_graphs(b))

    def check(pair: tuple[Graph, Graph]) -> list[Counterexample]:
        g, h = pair
        u = disjoint_union(g, h)
        out = []
        if mu_value(u) != mu_value(g) + mu_value(h):
            out.append(Counterexample(_g6(g, h), mu_value(u), mu_value(g) + mu_value(h), "mu"))
        want = mu_check(g) + mu_check(h) + i_h(g) + i_h(h)
        if mu_check(u) != want:
            out.append(Counterexample(_g6(g, h), mu_check(u), want, "mu_check"))
        return out

    return CampaignReport("DISJ", _describe(b, shape="unordered pairs"), len(items), _run(check, items))


def _star(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=5, connected_only=False, max_s=3)
    items = [(s, g) for g in _graphs(b) for s in range(b.max_s + 1)]

    def check(item: tuple[int, Graph]) -> list[Counterexample]:
        s, g = item
        joined = g if s == 0 else join(complete_graph(s), g)
        out = []
        want_mu = max(1, mu_value(g) - s)
        if mu_value(joined) != want_mu:
            out.append(Counterexample(_g6(g), mu_value(joined), want_mu, f"mu(K_{s} * G)"))
        want_check = max(0, mu_check(g) - s)
        if mu_check(joined) != want_check:
            out.append(Counterexample(_g6(g), mu_check(joined), want_check, f"mu_check(K_{s} * G)"))
        return out

    return CampaignReport("STAR", _describe(b), len(items), _run(check, items))


def _lemmy(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=4, connected_only=False, seed=0, samples=10_000, max_s=4)
    pool = _graphs(b)
    rng = random.Random(b.seed)
    items = []
    for _ in range(b.samples):
        parts = tuple(rng.choice(pool) for _ in range(3))
        r = rng.randint(0, b.max_s)
        items.append((r, parts))

    def check(item: tuple[int, tuple[Graph, ...]]) -> list[Counterexample]:
        r, parts = item
        g = compose(r, parts)
        out = []
        want = max(0, sum(mu_check(p) + i_h(p) for p in parts) - r)
        got = mu_check(g)
        if got != want:
            out.append(Counterexample(_g6(*parts), got, want, f"r={r}"))
        union = union_all(parts)
        if mu_value(union) != sum(mu_value(p) for p in parts):
            out.append(Counterexample(_g6(*parts), mu_value(union),
                                      sum(mu_value(p) for p in parts), "mu of union"))
        if predicted_mu_check(r, parts) != want:
            out.append(Counterexample(_g6(*parts), predicted_mu_check(r, parts), want,
                                      "predicted_mu_check"))
        return out

    return CampaignReport("LEMMY", _describe(b, shape="seeded triples"), len(items), _run(check, items))


def _edgeadd(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=5, connected_only=True)
    items = _pairs(_graphs(b))

    def check(pair: tuple[Graph, Graph]) -> list[Counterexample]:
        g, h = pair
        u = disjoint_union(g, h)
        base_mu, base_check = mu_value(u), mu_check(u)
        tg, th = terminal_set(g), terminal_set(h)
        out = []
        for v in range(g.n):
            for w in range(h.n):
                plus = add_edge(u, v, g.n + w)
                both = v in tg and w in th
                want_mu = base_mu - 1 if both else base_mu
                if mu_value(plus) != want_mu:
                    out.append(Counterexample(_g6(g, h), mu_value(plus), want_mu, f"mu, v={v} w={w}"))
                if g.n == 1 and h.n == 1:
                    drop = 2
                else:
                    drop = 1 if both else 0
                if mu_check(plus) != base_check - drop:
                    out.append(Counterexample(_g6(g, h), mu_check(plus), base_check - drop,
                                              f"mu_check, v={v} w={w}"))
        return out

    return CampaignReport("EDGEADD", _describe(b, shape="unordered pairs, all cross edges"),
                          len(items), _run(check, items))


def _max1(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=6, connected_only=False)
    items = []
    for g in _graphs(b):
        c = cached_classify(g)
        for s in range(c.t):
            if g.n + s <= MAX_VERTICES:
                items.append((g, c, s))

    def check(item: tuple[Graph, Classification, int]) -> list[Counterexample]:
        g, c, s = item
        joined = g if s == 0 else join(complete_graph(s), g)
        cj = classify(joined)
        if cj.t != c.t - s or cj.in_M_t != c.in_M_t:
            return [Counterexample(_g6(g), {"t": cj.t, "inMt": cj.in_M_t},
                                   {"t": c.t - s, "inMt": c.in_M_t}, f"s={s}")]
        return []

    return CampaignReport("MAX1", _describe(b, shape="all G with 0 <= s < t"), len(items),
                          _run(check, items))


def _complete_or_free(g: Graph) -> bool:
    return g.is_complete() or len(universal_vertices(g)) == 0


def _cot(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=6, connected_only=False)
    base = b.graphs if b.graphs is not None else maximal_graphs(b.max_n)
    items = _pairs(base)

    def check(pair: tuple[Graph, Graph]) -> list[Counterexample]:
        g, h = pair
        cg, ch = cached_classify(g), cached_classify(h)
        if not (cg.in_M_t and ch.in_M_t):
            return [Counterexample(_g6(g, h), False, True, "factor not maximal")]
        cu = classify(disjoint_union(g, h))
        out = []
        want_t = cg.t + ch.t + i_h(g) + i_h(h)
        if cu.t != want_t:
            out.append(Counterexample(_g6(g, h), cu.t, want_t, "mu_check of union"))
        want = _complete_or_free(g) and _complete_or_free(h)
        if cu.in_M_t != want:
            out.append(Counterexample(_g6(g, h), cu.in_M_t, want, "union maximal"))
        return out

    return CampaignReport("COT", _describe(b, shape="unordered pairs of maximal graphs"),
                          len(items), _run(check, items))


def _term(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=7, connected_only=False)
    items = b.graphs if b.graphs is not None else maximal_graphs(b.max_n, min_t=1)

    def check(g: Graph) -> list[Counterexample]:
        terminal = terminal_set(g)
        universal = universal_vertices(g)
        out = []
        for v in range(g.n):
            if (v in terminal) == (v in universal):
                out.append(Counterexample(_g6(g), v in terminal, v not in universal,
                                          f"T(v) vs non-universal, v={v}"))
        for v, w in g.non_edges():
            if not terminal_pair_feasible(g, v, w):
                out.append(Counterexample(_g6(g), False, True, f"pair ({v}, {w}) not co-terminal"))
        return out

    return CampaignReport("TERM", _describe(b, shape="maximal graphs with t >= 1"), len(items),
                          _run(check, items))


def check_decomposition(g: Graph) -> list[Counterexample]:
    """Decompose ``g`` (which must be maximal with t >= 1) and verify every claim about the result."""
    try:
        dec = decompose(g)
    except PathCoverError as exc:
        return [Counterexample(_g6(g), str(exc), "maximal with t >= 1", "decompose precondition")]
    out = []
    if dec.s != len(universal_vertices(g)):
        out.append(Counterexample(_g6(g), dec.s, len(universal_vertices(g)), "s"))
    if dec.formula_value() != dec.t:
        out.append(Counterexample(_g6(g), dec.formula_value(), dec.t, "t formula"))
    for part in dec.parts:
        pc = classify(part.graph)
        ok = (part.kind.value == "complete" and part.graph.is_complete() and part.t == 0) or (
            part.kind.value == "trim" and pc.in_N_t and pc.t == part.t >= 1
        )
        if not ok:
            out.append(Counterexample(_g6(g, part.graph), part.kind.value, "complete or trim", "part"))
    rebuilt = compose(dec.s, [p.graph for p in dec.parts])
    if canonical_form(rebuilt) != canonical_form(g):
        out.append(Counterexample(_g6(g, rebuilt), canonical_form(rebuilt), canonical_form(g),
                                  "compose(decompose(G)) not isomorphic to G"))
    return out


def _decomp(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=8, connected_only=False)
    items = b.graphs if b.graphs is not None else maximal_graphs(b.max_n, min_t=1)
    return CampaignReport("DECOMP", _describe(b, shape="maximal graphs with t >= 1"), len(items),
                          _run(check_decomposition, items))


def _pendants(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def degree_one_structure(g: Graph) -> bool:
    """Pendant vertices have distinct neighbours and deleting them leaves a clique."""
    pend = _pendants(g)
    anchors = [g.neighbors(v)[0] for v in pend]
    if len(set(anchors)) != len(anchors):
        return False
    rest = [v for v in range(g.n) if v not in pend]
    return bool(rest) and g.induced(rest).is_complete()


def _degone(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=8, connected_only=False)
    lemma_n = min(b.max_n, 7)
    lemma_items = []
    for g in _corpus(lemma_n, False):
        pend = set(_pendants(g))
        for u in range(g.n):
            if len([x for x in g.neighbors(u) if x in pend]) >= 2:
                for v3 in sorted(pend):
                    if v3 != u and not g.has_edge(u, v3):
                        lemma_items.append(("lemma", g, u, v3))
    trim = [g for g in _corpus(b.max_n, True) if cached_classify(g).in_N_t]
    items = lemma_items + [("prop", g, 0, 0) for g in trim]

    def check(item: tuple[str, Graph, int, int]) -> list[Counterexample]:
        kind, g, u, v3 = item
        if kind == "lemma":
            before, after = mu_value(g), mu_value(add_edge(g, u, v3))
            if before != after:
                return [Counterexample(_g6(g), after, before, f"mu(G + u v3), u={u} v3={v3}")]
            return []
        t = cached_classify(g).t
        count = len(_pendants(g))
        out = []
        if count > 2 * t - 1:
            out.append(Counterexample(_g6(g), count, f"<= {2 * t - 1}", "degree-one count"))
        structured = count > 0 and degree_one_structure(g)
        if (count == 2 * t - 1) != structured:
            out.append(Counterexample(_g6(g), structured, count == 2 * t - 1,
                                      "equality iff distinct anchors and clique remainder"))
        return out

    return CampaignReport(
        "DEGONE",
        _describe(b, lemmaMaxN=lemma_n, lemmaCases=len(lemma_items), trimGraphs=len(trim)),
        len(items),
        _run(check, items),
    )


def check_family_member(g: Graph, family: str | None, t: int | None) -> list[Counterexample]:
    """Compare a generated graph's recomputed class with its claimed ``(family, t)``."""
    c = classify(g)
    if family == "N":
        ok = c.in_N_t and c.t == t
    elif family == "M":
        ok = c.in_M_t and c.t == t
    else:
        ok = not c.in_M_t
    if ok:
        return []
    return [Counterexample(_g6(g), c.to_json(), {"family": family, "t": t}, "family membership")]


def _family(b: Bounds) -> CampaignReport:
    b = b.with_defaults(max_n=18, seed=0, samples=50)
    items: list[tuple[str, Graph, str | None, int | None]] = []
    for t in (2, 3, 4):
        for m in range(2 * t - 1, 2 * t + 3):
            spec = WhirligigSpec(t, m)
            e = expected_whirligig(spec)
            items.append((f"whirligig t={t} m={m}", whirligig(spec), e.family, e.t))
    rng = random.Random(b.seed)
    for k in range(b.samples):
        spec = random_generalized_spec(rng, max_order=b.max_n)
        e = expected_generalized(spec)
        items.append((f"generalized #{k} {spec}", generalized_whirligig(spec), e.family, e.t))
    small = 12
    for r, sizes in skupien_parameters(small):
        items.append((f"skupien r={r} sizes={list(sizes)}", skupien(r, sizes), "M", 1))
    for r, sizes in zelinka_parameters(small):
        items.append((f"zelinka_type1 r={r} sizes={list(sizes)}", zelinka_type1(r, sizes), "M", 2))

    def check(item: tuple[str, Graph, str | None, int | None]) -> list[Counterexample]:
        label, g, family, t = item
        found = check_family_member(g, family, t)
        for c in found:
            c.detail = label
        return found

    return CampaignReport(
        "FAMILY",
        _describe(b, generalizedMaxOrder=b.max_n, cliqueFamilyMaxOrder=small),
        len(items),
        _run(check, items),
    )


CAMPAIGNS: dict[str, tuple[Callable[[Bounds], CampaignReport], str]] = {
    "AMI": (_ami, "mu_check = mu - i_H, against the least clique join"),
    "ALPHA": (_alpha, "least independent-set join agrees with least clique join"),
    "DISJ": (_disj, "mu and mu_check of a disjoint union"),
    "STAR": (_star, "mu and mu_check of a join with K_s"),
    "LEMMY": (_lemmy, "mu_check of K_r joined with a union of several graphs"),
    "EDGEADD": (_edgeadd, "adding a bridge between two graphs lowers mu iff both ends are terminal"),
    "MAX1": (_max1, "G is maximal iff K_s * G is, for s < t"),
    "COT": (_cot, "union of maximal graphs is maximal iff each is complete or universal-free"),
    "TERM": (_term, "in a maximal graph the terminal vertices are exactly the non-universal ones"),
    "DECOMP": (_decomp, "decomposition into a clique joined with complete or trim parts"),
    "DEGONE": (_degone, "degree-one vertices in trim maximal graphs"),
    "FAMILY": (_family, "whirligig-type and clique-join families land in the claimed class"),
    "ORACLE": (_oracle, "subset DP agrees with exhaustive path partition search"),
}


def run_campaign(campaign_id: str, bounds: Bounds | None = None) -> CampaignReport:
    key = campaign_id.upper()
    if key not in CAMPAIGNS:
        raise ArgumentError(f"unknown campaign {campaign_id!r}; known: {', '.join(CAMPAIGNS)}")
    return CAMPAIGNS[key][0](bounds or Bounds())

