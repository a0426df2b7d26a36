from __future__ import annotations

from collections import Counter

import pytest

from period_forge.canon import is_isomorphic
from period_forge.errors import GraphError
from period_forge.families import (
    FamilyParams,
    family_dual,
    family_graph,
    family_layout,
    zigzag,
    zigzag_completed,
)
from period_forge.graph import degrees, is_connected, loop_number, make_graph
from period_forge.transforms import complete, planar_dual, trace_faces

from oracles import figure_zigzag5, figure_zigzag6, ladder_with_apex

K5 = make_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
K4 = make_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def test_params_validation():
    assert FamilyParams(1, 2, 3).n == 12
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, -2)]:
        with pytest.raises(GraphError):
            FamilyParams(*bad)


def test_zigzag_completed_small():
    assert is_isomorphic(zigzag_completed(3), K5)
    for n, nv in [(5, 7), (6, 8)]:
        g = zigzag_completed(n)
        assert (g.num_vertices, g.num_edges) == (nv, 2 * nv)
        assert set(degrees(g).values()) == {4}
    with pytest.raises(GraphError):
        zigzag_completed(2)


def test_zigzag_completed_regular_up_to_20():
    for n in range(3, 21):
        assert set(degrees(zigzag_completed(n)).values()) == {4}


def test_zigzag():
    assert is_isomorphic(zigzag(3), K4)
    g = zigzag(4)
    assert (g.num_vertices, g.num_edges, loop_number(g)) == (5, 8, 4)
    with pytest.raises(GraphError):
        zigzag(1)


def test_zigzag_matches_figure_drawings():
    assert is_isomorphic(zigzag(5), figure_zigzag5())
    assert is_isomorphic(zigzag(6), figure_zigzag6())
    # the completed drawing is the completion of the uncompleted one
    assert is_isomorphic(zigzag_completed(5), complete(figure_zigzag5()))


def test_family_111():
    g = family_graph(FamilyParams(1, 1, 1))
    assert (g.num_vertices, g.num_edges, loop_number(g)) == (7, 12, 6)
    assert sorted(degrees(g).values()) == [3, 3, 3, 3, 4, 4, 4]


def test_family_213():
    g, lay = family_layout(FamilyParams(2, 1, 3))
    deg = degrees(g)
    assert (g.num_vertices, g.num_edges) == (13, 24)
    assert deg[lay.apex] == 6
    three = {v for v, d in deg.items() if d == 3}
    assert three == set(lay.bottom) | {lay.left_outer[-1], lay.right_outer[-1]}
    assert len(three) == 6


@pytest.mark.parametrize("k,l,m", [(k, l, m) for k in range(1, 4) for l in range(1, 4) for m in range(1, 4)])
def test_family_counts_and_degrees(k, l, m):
    p = FamilyParams(k, l, m)
    g, lay = family_layout(p)
    deg = degrees(g)
    assert g.num_vertices == p.n + 1 and g.num_edges == 2 * p.n
    assert deg[lay.apex] == m + 3
    assert Counter(deg.values())[3] == m + 3
    assert all(d == 4 for v, d in deg.items() if d not in (3,) and v != lay.apex)
    assert g.markers == {"a": lay.apex, "b": lay.top[1], "zero": lay.bottom[1]}


@pytest.mark.parametrize("k,l,m", [(k, l, m) for k in range(1, 5) for l in range(1, 5) for m in range(1, 5) if k + l + m <= 6])
def test_rotation_is_planar(k, l, m):
    g = family_graph(FamilyParams(k, l, m))
    faces = trace_faces(g)
    assert g.num_vertices - g.num_edges + len(faces) == 2


@pytest.mark.parametrize("k,l,m", [(2, 1, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)])
def test_mirror_symmetry(k, l, m):
    assert is_isomorphic(family_graph(FamilyParams(k, l, m)), family_graph(FamilyParams(l, k, m)))


def test_terminal_identity_small():
    for k in range(1, 5):
        for l in range(1, 6 - k):
            assert is_isomorphic(family_graph(FamilyParams(k, l, 1)), zigzag(2 * k + 2 * l + 2))


def test_family_dual_counts():
    d = family_dual(FamilyParams(1, 1, 1))
    assert (d.num_vertices, d.num_edges) == (7, 12)
    assert is_connected(d)


@pytest.mark.parametrize("k,l,m", [(1, 1, 1), (1, 1, 2), (2, 1, 3), (2, 2, 2)])
def test_dual_common_vertex_degree(k, l, m):
    # the outer face of the drawing has k + l + m + 2 sides
    d = family_dual(FamilyParams(k, l, m))
    assert max(degrees(d).values()) == k + l + m + 2
    assert d.num_vertices == 2 * (k + l + m) + 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dual_k1_l1_is_ladder_with_apex(m):
    assert is_isomorphic(family_dual(FamilyParams(1, 1, m)), ladder_with_apex(m + 1))


def test_double_dual():
    g = family_graph(FamilyParams(1, 1, 1))
    assert is_isomorphic(planar_dual(planar_dual(g)), g)
