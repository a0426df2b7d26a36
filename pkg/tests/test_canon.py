from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from period_forge.canon import canonical_form, find_isomorphism, is_isomorphic
from period_forge.families import FamilyParams, family_graph, family_layout, zigzag, zigzag_completed
from period_forge.graph import make_graph
from period_forge.transforms import complete, twist, marker_cut

K4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def shuffled(g, rng):
    perm = list(g.vertices)
    rng.shuffle(perm)
    return g.relabel(dict(zip(g.vertices, perm)))


def test_triangle_relabel():
    t1 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    t2 = make_graph([5, 7, 9], [(9, 5), (7, 9), (5, 7)])
    assert is_isomorphic(t1, t2)
    phi = find_isomorphism(t1, t2)
    assert sorted(phi.values()) == [5, 7, 9]


def test_non_isomorphic():
    assert not is_isomorphic(K4, C4)
    k4_minus = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert canonical_form(K4).certificate != canonical_form(k4_minus).certificate


def test_weights_matter():
    a = make_graph(3, [(0, 1), (1, 2), (0, 2, -1)])
    b = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert not is_isomorphic(a, b)
    # a weight-2 edge is not two parallel unit edges
    c = make_graph(2, [(0, 1, 2)])
    d = make_graph(2, [(0, 1), (0, 1)])
    assert not is_isomorphic(c, d)


def test_c4_two_labelings():
    other = make_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(C4).certificate == canonical_form(other).certificate


def test_twisted_completed_family_matches_next_member():
    base, lay = family_layout(FamilyParams(1, 1, 2))
    g = complete(base)
    out = twist(g, marker_cut(g), side=lay.left_outer[0])
    assert is_isomorphic(out, complete(family_graph(FamilyParams(2, 1, 1))))


def test_zigzag_completed_random_relabel():
    rng = random.Random(1)
    g = zigzag_completed(5)
    ref = canonical_form(g).certificate
    for _ in range(100):
        assert canonical_form(shuffled(g, rng)).certificate == ref


@st.composite
def permuted_family(draw):
    k = draw(st.integers(1, 3))
    l = draw(st.integers(1, 3))
    m = draw(st.integers(1, 3))
    g = family_graph(FamilyParams(k, l, m))
    perm = draw(st.permutations(list(g.vertices)))
    return g, g.relabel(dict(zip(g.vertices, perm)))


@settings(max_examples=100, deadline=None)
@given(permuted_family())
def test_certificate_invariant_under_relabeling(pair):
    g, h = pair
    assert canonical_form(g).certificate == canonical_form(h).certificate
    phi = find_isomorphism(h, g)
    assert phi is not None


def _corpus():
    out = [zigzag(n) for n in range(3, 9)]
    out += [family_graph(FamilyParams(k, l, m)) for k in (1, 2) for l in (1, 2) for m in (1, 2, 3)]
    out += [complete(g) for g in list(out)]
    return out


def test_reflexive_and_symmetric():
    corpus = _corpus()
    for g in corpus:
        assert is_isomorphic(g, g)
    for i, g in enumerate(corpus):
        for h in corpus[i + 1:]:
            assert is_isomorphic(g, h) == is_isomorphic(h, g)


def test_distinct_family_members_are_distinguished():
    # same loop number, different graphs
    assert not is_isomorphic(family_graph(FamilyParams(1, 1, 2)), family_graph(FamilyParams(2, 1, 1)))
    assert not is_isomorphic(family_graph(FamilyParams(1, 1, 2)), zigzag(8))


@pytest.mark.parametrize("n", [8, 14, 24])
def test_large_circulant_is_fast_enough(n):
    rng = random.Random(n)
    g = zigzag_completed(n)
    assert is_isomorphic(g, shuffled(g, rng))
