from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from period_forge.errors import GraphError
from period_forge.families import FamilyParams, family_graph, zigzag, zigzag_completed
from period_forge.graph import (
    Multigraph,
    WeightedEdge,
    degrees,
    loop_number,
    make_graph,
    split_by_cut,
    weighted_degree,
)
from period_forge.transforms import complete

TRIANGLE = make_graph(3, [(0, 1), (1, 2), (0, 2)])
K4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_weighted_degree_basic():
    assert all(weighted_degree(TRIANGLE, v) == 2 for v in range(3))
    neg = make_graph(2, [(0, 1, -1)])
    assert weighted_degree(neg, 0) == -1


def test_weighted_degree_completed_family_infinity():
    g = complete(family_graph(FamilyParams(1, 1, 2)))
    assert weighted_degree(g, g.markers["infinity"]) == 4


def test_weighted_degree_unknown_vertex():
    with pytest.raises(GraphError):
        weighted_degree(TRIANGLE, 7)


def test_loop_number():
    assert loop_number(TRIANGLE) == 1
    assert loop_number(K4) == 3
    assert loop_number(family_graph(FamilyParams(1, 1, 1))) == 6


def test_loop_number_rejects_bad_input():
    with pytest.raises(GraphError):
        loop_number(make_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        loop_number(make_graph(2, [(0, 1, -1)]))


def test_construction_invariants():
    with pytest.raises(GraphError, match="self-loop"):
        make_graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        make_graph(2, [(0, 5)])
    with pytest.raises(GraphError):
        make_graph(2, [(0, 1, 0)])
    with pytest.raises(GraphError):
        Multigraph((0, 1), (WeightedEdge(0, 0, 1), WeightedEdge(0, 0, 1)))
    with pytest.raises(GraphError):
        Multigraph((0, 1), (WeightedEdge(0, 0, 1),), rotation={0: (0,), 1: ()})
    with pytest.raises(GraphError):
        Multigraph((0, 1), (WeightedEdge(0, 0, 1),), markers={"c": 0})


def test_parallel_edges_are_kept_separate():
    g = make_graph(2, [(0, 1), (0, 1, -1)])
    assert g.num_edges == 2
    assert weighted_degree(g, 0) == 0


def test_split_by_cut_family():
    g = complete(family_graph(FamilyParams(1, 1, 2)))
    cut = [g.markers[k] for k in ("a", "b", "zero", "infinity")]
    assert len(split_by_cut(g, cut)) == 2


def test_split_by_cut_small():
    c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert split_by_cut(c4, [0, 1, 2, 3]) == []
    path = make_graph(6, [(i, i + 1) for i in range(5)])
    assert split_by_cut(path, [1, 2, 3, 4]) == [{0}, {5}]
    with pytest.raises(GraphError):
        split_by_cut(path, [1, 1, 2, 3])


@st.composite
def weighted_graphs(draw):
    n = draw(st.integers(2, 7))
    m = draw(st.integers(0, 12))
    edges = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1).filter(lambda x: x != u))
        w = draw(st.integers(-3, 3).filter(lambda x: x != 0))
        edges.append((u, v, w))
    return make_graph(n, edges)


@settings(max_examples=100, deadline=None)
@given(weighted_graphs())
def test_handshake(g):
    assert sum(degrees(g).values()) == 2 * sum(e.weight for e in g.edges)


@pytest.mark.parametrize("k,l,m", [(k, l, m) for k in range(1, 5) for l in range(1, 5) for m in range(1, 5) if k + l + m <= 6])
def test_period_graph_edge_count(k, l, m):
    g = family_graph(FamilyParams(k, l, m))
    assert g.num_edges == 2 * loop_number(g)


def test_zigzag_edge_count():
    for n in range(3, 12):
        g = zigzag(n)
        assert g.num_edges == 2 * loop_number(g) == 2 * n
    assert zigzag_completed(5).num_edges == 14
