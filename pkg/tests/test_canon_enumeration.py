import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, labelled_graphs, permutation_canon
from pathcover.canon import canonical_form, canonical_graph
from pathcover.enumeration import (
    build_catalog,
    canonical_key,
    enumerate_graphs,
    enumerate_up_to,
    parse_filter,
)
from pathcover.errors import ArgumentError, SizeError
from pathcover.families import WhirligigSpec, named, whirligig
from pathcover.graph import complete_graph, from_graph6, path_graph

# Isomorphism classes of graphs on n vertices, n = 1..8.
KNOWN_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]
KNOWN_CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_permutation_dedup(n):
    classes = {permutation_canon(g) for g in labelled_graphs(n)}
    listed = list(enumerate_graphs(n))
    assert len(listed) == len(classes)
    assert {permutation_canon(g) for g in listed} == classes


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_counts_match_known_sequence(n):
    assert sum(1 for _ in enumerate_graphs(n)) == KNOWN_COUNTS[n - 1]
    assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == KNOWN_CONNECTED[n - 1]


def test_enumeration_examples_and_errors():
    assert [g.n for g in enumerate_graphs(1)] == [1]
    connected = list(enumerate_graphs(3, connected_only=True))
    assert sorted(g.num_edges for g in connected) == [2, 3]
    assert len(list(enumerate_up_to(3))) == 1 + 2 + 4
    with pytest.raises(SizeError, match="graph6 stream"):
        next(enumerate_graphs(9))
    with pytest.raises(ArgumentError):
        next(enumerate_graphs(0))


def test_enumeration_is_in_canonical_order():
    for n in range(1, 7):
        codes = [canonical_form(g) for g in enumerate_graphs(n)]
        assert codes == sorted(codes)
        assert all(canonical_form(from_graph6(c)) == c for c in codes)


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_form_is_isomorphism_complete(n):
    by_form: dict[str, set] = {}
    for g in labelled_graphs(n):
        by_form.setdefault(canonical_form(g), set()).add(permutation_canon(g))
    assert all(len(classes) == 1 for classes in by_form.values())
    assert len(by_form) == KNOWN_COUNTS[n - 1]


def test_canonical_form_examples():
    a = path_graph(3)
    b = a.relabel([1, 0, 2])
    assert a != b and canonical_form(a) == canonical_form(b)
    assert canonical_form(complete_graph(3)) != canonical_form(a)
    assert canonical_form(named("fig1-net")) == canonical_form(whirligig(WhirligigSpec(2, 3)))
    with pytest.raises(SizeError):
        canonical_form(complete_graph(13))
    assert canonical_key(complete_graph(13)).startswith("~")


@settings(max_examples=150)
@given(graphs(1, 11), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(g).num_edges == g.num_edges


def test_canonical_form_on_symmetric_graphs():
    # Vertex-transitive graphs stress orbit pruning.
    petersen = from_graph6("IheA@GUAo")
    rng = random.Random(3)
    for _ in range(5):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(petersen.relabel(perm)) == canonical_form(petersen)


def test_parse_filter():
    assert parse_filter("all") == ("all", None)
    assert parse_filter("M") == ("M", None)
    assert parse_filter("N2") == ("N", 2)
    assert parse_filter("M_1") == ("M", 1)
    with pytest.raises(ArgumentError):
        parse_filter("X3")


def test_catalog_smallest_trim_two():
    entries = build_catalog(enumerate_up_to(6), "N", 2)
    assert [e.n for e in entries] == [6]
    assert entries[0].canonical == canonical_form(named("fig1-net"))
    dec = entries[0].decomposition
    assert dec is not None and dec.s == 0 and [p.kind.value for p in dec.parts] == ["trim"]


def test_catalog_complete_graphs_are_the_t0_maximal_class():
    entries = build_catalog(enumerate_up_to(4), "M", 0)
    assert [e.canonical for e in entries] == [canonical_form(complete_graph(n)) for n in range(1, 5)]
    assert all(e.decomposition is None for e in entries)


def test_catalog_m1_entries_decompose():
    entries = build_catalog(enumerate_graphs(5), "M", 1)
    assert entries
    for e in entries:
        assert e.decomposition is not None
        assert e.decomposition.formula_value() == 1
        assert e.to_json()["classification"]["inMt"] is True


def test_catalog_rejects_unknown_class():
    with pytest.raises(ArgumentError):
        build_catalog([complete_graph(2)], "Q")


def test_enumeration_oracle_pairs_are_exhaustive():
    # Every labelled graph on 4 vertices is isomorphic to exactly one listed representative.
    reps = {canonical_form(g) for g in enumerate_graphs(4)}
    for g in labelled_graphs(4):
        assert canonical_form(g) in reps
