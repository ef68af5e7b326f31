import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathcover.canon import canonical_form
from pathcover.errors import ArgumentError, ParameterError
from pathcover.families import (
    FIGURE_NAMES,
    GeneralizedWhirligigSpec,
    WhirligigSpec,
    expected_generalized,
    expected_skupien,
    expected_whirligig,
    expected_zelinka_type1,
    figure_labels,
    generalized_whirligig,
    named,
    random_generalized_spec,
    skupien,
    skupien_parameters,
    whirligig,
    zelinka_parameters,
    zelinka_type1,
)
from pathcover.graph import complete_graph, disjoint_union, join, path_graph, union_all
from pathcover.invariants import mu_check
from pathcover.maximality import classify

K = complete_graph
FIG2 = GeneralizedWhirligigSpec(2, 0, ((1, (1,)), (1, (1,)), (2, (1, 1))))


def _class(g):
    c = classify(g)
    return ("N" if c.in_N_t else "M" if c.in_M_t else None), c.t


def test_whirligig_examples():
    net = whirligig(WhirligigSpec(2, 3))
    assert canonical_form(net) == canonical_form(named("fig1-net"))
    fig3 = whirligig(WhirligigSpec(3, 5))
    assert fig3 == named("fig3-whirligig")
    assert _class(fig3) == ("N", 3)
    with pytest.raises(ParameterError, match="m >= 2t-1"):
        WhirligigSpec(2, 2)
    with pytest.raises(ParameterError):
        WhirligigSpec(0, 3)
    with pytest.raises(ParameterError, match="exceeds"):
        WhirligigSpec(4, 18)


def test_whirligig_vertex_order():
    g = whirligig(WhirligigSpec(2, 4))
    assert g.induced(range(4)).is_complete()
    assert [g.neighbors(v) for v in (4, 5, 6)] == [[1], [2], [3]]
    assert g.degree(0) == 3


def test_generalized_figure_two_example():
    g = generalized_whirligig(FIG2)
    assert canonical_form(g) == canonical_form(named("fig2-a3core"))
    assert _class(g) == ("N", 2)
    assert g.induced(range(4)).is_complete()


def test_generalized_specialises_to_whirligig():
    for t, m in ((2, 3), (2, 5), (3, 6)):
        spec = GeneralizedWhirligigSpec(t, m - (2 * t - 1), tuple((1, (1,)) for _ in range(2 * t - 1)))
        assert generalized_whirligig(spec) == whirligig(WhirligigSpec(t, m))


@pytest.mark.parametrize(
    "kwargs, message",
    [
        (dict(t=2, u0_size=0, groups=((1, (1,)), (1, (1,)))), "exactly 2t-1"),
        (dict(t=2, u0_size=0, groups=((1, (1,)), (0, ()), (1, (1,)))), "group 2"),
        (dict(t=2, u0_size=0, groups=((1, (1,)), (1, (1,)), (2, (1,)))), "group 3"),
        (dict(t=2, u0_size=0, groups=((1, (0,)), (1, (1,)), (1, (1,)))), "group 1"),
        (dict(t=2, u0_size=-1, groups=((1, (1,)),) * 3), "U_0"),
        (dict(t=0, u0_size=0, groups=()), "t must be"),
        (dict(t=2, u0_size=20, groups=((1, (1,)),) * 3), "cap"),
    ],
)
def test_generalized_spec_validation(kwargs, message):
    with pytest.raises(ParameterError, match=message):
        GeneralizedWhirligigSpec(**kwargs)


def test_generalized_spec_from_json():
    spec = GeneralizedWhirligigSpec.from_json(2, 0, [[1, [1]], [1, [1]], [2, [1, 1]]])
    assert spec == FIG2
    with pytest.raises(ParameterError):
        GeneralizedWhirligigSpec.from_json(2, 0, [1, 2, 3])


def test_generalized_cliques_are_exactly_the_construction_edges():
    spec = GeneralizedWhirligigSpec(2, 1, ((1, (2,)), (2, (1, 3)), (1, (1,))))
    g = generalized_whirligig(spec)
    clique = 1 + 1 + 2 + 1
    assert g.induced(range(clique)).is_complete()
    # V blocks in (i, j) order: V_11 = {5,6}, V_21 = {7}, V_22 = {8,9,10}, V_31 = {11}.
    assert g.neighbors(5) == [1, 6]
    assert g.neighbors(7) == [2, 3]
    assert g.neighbors(9) == [2, 3, 8, 10]
    assert g.neighbors(11) == [4]
    assert g.num_edges == clique * (clique - 1) // 2 + (2 + 1) + 2 + (2 * 3 + 3) + 1


def test_skupien_examples():
    assert skupien(1, [1, 1]) == join(K(1), disjoint_union(K(1), K(1)))
    assert canonical_form(skupien(1, [1, 1])) == canonical_form(path_graph(3))
    assert _class(skupien(1, [1, 1])) == ("M", 1)
    g = skupien(2, [1, 2, 3])
    assert g.n == 8 and _class(g) == ("M", 1)
    with pytest.raises(ParameterError, match="r\\+1"):
        skupien(2, [1, 1])
    with pytest.raises(ParameterError):
        skupien(1, [0, 2])


def test_zelinka_examples():
    g = zelinka_type1(1, [1, 1])
    assert g == disjoint_union(K(1), K(1)) and _class(g) == ("M", 2)
    g = zelinka_type1(2, [2, 2, 2])
    assert g == join(K(1), union_all([K(2), K(2), K(2)])) and _class(g) == ("M", 2)
    assert mu_check(zelinka_type1(3, [1, 1, 1, 1])) == 2
    with pytest.raises(ParameterError):
        zelinka_type1(0, [1])


def test_named_figures():
    assert set(FIGURE_NAMES) == {"fig1-net", "fig2-a3core", "fig3-whirligig"}
    net = named("fig1-net")
    assert (net.n, net.num_edges, mu_check(net)) == (6, 6, 2)
    fig2 = named("fig2-a3core")
    labels = figure_labels("fig2-a3core")
    idx = {name: v for v, name in labels.items()}
    assert fig2.n == 8
    assert fig2.induced([idx[f"u{k}"] for k in range(1, 5)]).is_complete()
    for a, b in (("v1", "u1"), ("v2", "u2"), ("v2", "u3"), ("v3", "u2"), ("v3", "u3"), ("v4", "u4")):
        assert fig2.has_edge(idx[a], idx[b])
    assert fig2.num_edges == 6 + 6
    assert _class(fig2) == ("N", 2)
    with pytest.raises(ArgumentError):
        named("fig9")
    with pytest.raises(ArgumentError):
        figure_labels("fig9")


def test_expected_metadata_for_degenerate_t1():
    for m in range(1, 6):
        spec = WhirligigSpec(1, m)
        e = expected_whirligig(spec)
        assert _class(whirligig(spec)) == (e.family, e.t)
    for u0 in range(0, 3):
        for u1 in range(1, 3):
            for vs in ((1,) * u1, (2,) * u1):
                spec = GeneralizedWhirligigSpec(1, u0, ((u1, vs),))
                e = expected_generalized(spec)
                assert _class(generalized_whirligig(spec)) == (e.family, e.t)
    assert (expected_skupien().family, expected_skupien().t) == ("M", 1)
    assert (expected_zelinka_type1().family, expected_zelinka_type1().t) == ("M", 2)


def test_parameter_enumerations():
    sk = list(skupien_parameters(6))
    assert (1, (4, 1)) in sk and (2, (2, 1, 1)) in sk and (1, (1, 1)) in sk
    assert all(r + sum(s) <= 6 and len(s) == r + 1 and list(s) == sorted(s, reverse=True) for r, s in sk)
    ze = list(zelinka_parameters(6))
    assert (1, (1, 1)) in ze
    assert all(r - 1 + sum(s) <= 6 and len(s) == r + 1 for r, s in ze)


@pytest.mark.parametrize("t", [2, 3, 4])
def test_whirligigs_are_trim(t):
    for m in range(2 * t - 1, 2 * t + 3):
        assert _class(whirligig(WhirligigSpec(t, m))) == ("N", t)


def test_degree_one_extremal_structure_of_whirligig():
    for t in (2, 3, 4):
        g = whirligig(WhirligigSpec(t, 2 * t - 1))
        pendants = [v for v in range(g.n) if g.degree(v) == 1]
        assert len(pendants) == 2 * t - 1
        anchors = [g.neighbors(v)[0] for v in pendants]
        assert len(set(anchors)) == len(anchors)
        assert g.induced([v for v in range(g.n) if v not in pendants]).is_complete()


@settings(max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_sampled_generalized_whirligigs_are_trim(seed):
    spec = random_generalized_spec(random.Random(seed), max_order=13, ts=(2, 3))
    assert spec.order <= 13
    assert _class(generalized_whirligig(spec)) == ("N", spec.t)


def test_random_spec_rejects_impossible_bounds():
    with pytest.raises(ParameterError):
        random_generalized_spec(random.Random(0), max_order=5, ts=(3,))


@settings(max_examples=30)
@given(st.integers(1, 3), st.data())
def test_clique_families_land_in_their_class(r, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=r + 1, max_size=r + 1))
    assert _class(skupien(r, sizes)) == ("M", 1)
    assert _class(zelinka_type1(r, sizes)) == ("M", 2)
