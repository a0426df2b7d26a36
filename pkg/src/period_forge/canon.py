"""Canonical labeling of weighted multigraphs by color refinement plus backtracking.

The search individualizes vertices of the first smallest non-singleton color
class and keeps the lexicographically smallest relabeled edge list over all
leaves. Graphs here have a few dozen vertices at most, so no automorphism
pruning is attempted.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Multigraph


@dataclass(frozen=True)
class Certificate:
    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class CanonicalForm:
    certificate: Certificate
    # labeling[v] is the canonical position of vertex v
    labeling: dict[int, int]

    @property
    def order(self) -> list[int]:
        """Vertices listed in canonical order."""
        inv = sorted(self.labeling, key=self.labeling.__getitem__)
        return inv


def _adjacency(g: Multigraph) -> tuple[list[int], list[list[tuple[int, int]]]]:
    verts = list(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[tuple[int, int]]] = [[] for _ in verts]
    for e in g.edges:
        iu, iv = index[e.u], index[e.v]
        adj[iu].append((iv, e.weight))
        adj[iv].append((iu, e.weight))
    return verts, adj


def _refine(adj, colors: list) -> list[int]:
    """Equitable refinement; colors are re-indexed by sorted signature, so the
    result depends only on the isomorphism class of (graph, coloring)."""
    keys = sorted(set(colors))
    rank = {c: i for i, c in enumerate(keys)}
    cur = [rank[c] for c in colors]
    ncol = len(keys)
    while True:
        sigs = [
            (cur[v], tuple(sorted((cur[w], wt) for w, wt in adj[v])))
            for v in range(len(adj))
        ]
        uniq = sorted(set(sigs))
        if len(uniq) == ncol:
            return cur
        rank = {s: i for i, s in enumerate(uniq)}
        cur = [rank[s] for s in sigs]
        ncol = len(uniq)


def _cert_for(adj, labels: list[int]) -> tuple[tuple[int, int, int], ...]:
    out = []
    for v, nbrs in enumerate(adj):
        for w, wt in nbrs:
            a, b = labels[v], labels[w]
            if a < b:
                out.append((a, b, wt))
    out.sort()
    return tuple(out)


def canonical_form(g: Multigraph) -> CanonicalForm:
    verts, adj = _adjacency(g)
    n = len(verts)
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            cert = _cert_for(adj, colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, colors
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if colors[v] == target]
        for v in cell:
            search([2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)])

    if n == 0:
        return CanonicalForm(Certificate(0, ()), {})
    search([0] * n)
    labels = best[1]
    return CanonicalForm(Certificate(n, best[0]), {verts[i]: labels[i] for i in range(n)})


def _cheap_invariant(g: Multigraph):
    deg: dict[int, list] = {v: [] for v in g.vertices}
    for e in g.edges:
        deg[e.u].append(e.weight)
        deg[e.v].append(e.weight)
    return (
        g.num_vertices,
        g.num_edges,
        sorted(e.weight for e in g.edges),
        sorted(tuple(sorted(x)) for x in deg.values()),
    )


def _edge_multiset(g: Multigraph, phi=None):
    f = (lambda v: v) if phi is None else phi.__getitem__
    return sorted((min(f(e.u), f(e.v)), max(f(e.u), f(e.v)), e.weight) for e in g.edges)


def find_isomorphism(g1: Multigraph, g2: Multigraph) -> dict[int, int] | None:
    """Vertex bijection g1 -> g2 carrying the weighted edge multiset onto that of g2, or None.

    Marker vertices are ignored.
    """
    if _cheap_invariant(g1) != _cheap_invariant(g2):
        return None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.certificate != c2.certificate:
        return None
    order2 = c2.order
    phi = {v: order2[pos] for v, pos in c1.labeling.items()}
    # the witness is cheap to check, so check it
    assert _edge_multiset(g1, phi) == _edge_multiset(g2)
    return phi


def is_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    return find_isomorphism(g1, g2) is not None
