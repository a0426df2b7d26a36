"""The Kirchhoff polynomial Psi_G = sum over spanning trees T of prod_{e not in T} alpha_e.

Monomials are edge-id bitsets (bit e set <=> alpha_e is a factor).
"""
from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .canon import canonical_form
from .errors import GraphError, InvariantViolation
from .graph import Multigraph, WeightedEdge, is_connected

DEFAULT_MAX_EDGES = 24


def max_edges_default(fallback: int) -> int:
    env = os.environ.get("PERIOD_FORGE_MAX_EDGES")
    return int(env) if env else fallback


@dataclass(frozen=True)
class GraphPolynomial:
    variables: tuple[int, ...]
    terms: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: c for m, c in self.terms.items() if c != 0})

    def __eq__(self, other):
        if not isinstance(other, GraphPolynomial):
            return NotImplemented
        return set(self.variables) == set(other.variables) and self.terms == other.terms

    __hash__ = None

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(_bits(m) for m in self.terms)

    def evaluate(self, point: Mapping[int, float | Fraction]):
        total = 0
        for mask, c in self.terms.items():
            prod = c
            for e in _bits(mask):
                prod = prod * point[e]
            total = total + prod
        return total

    def dual_transform(self) -> GraphPolynomial:
        """(prod_e alpha_e) * P(1/alpha_1, ..., 1/alpha_N), i.e. complement every monomial."""
        full = 0
        for e in self.variables:
            full |= 1 << e
        return GraphPolynomial(self.variables, {full ^ m: c for m, c in self.terms.items()})

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials():
            c = self.terms[sum(1 << e for e in mono)]
            factors = [f"a{e}" for e in mono]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _check_psi_input(g: Multigraph, max_edges: int | None) -> None:
    if not g.is_ordinary():
        raise GraphError("the graph polynomial is defined here for weight +1 edges only")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    bound = max_edges_default(DEFAULT_MAX_EDGES) if max_edges is None else max_edges
    if g.num_edges > bound:
        raise GraphError(
            f"{g.num_edges} edges exceeds the symbolic bound {bound}; use psi_eval for numeric values"
        )


def spanning_tree_masks(g: Multigraph) -> list[int]:
    """Bitsets of the edges of every spanning tree, by include/exclude backtracking.

    An edge may only be excluded if the remaining edges still connect the
    graph, so every leaf of the search is a spanning tree.
    """
    verts = list(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    edges = [(idx[e.u], idx[e.v], e.id) for e in g.edges]
    E = len(edges)
    if n <= 1:
        return [0]
    out: list[int] = []
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connected(start: int) -> bool:
        # are the current components joined by edges[start:]?
        p = [find(x) for x in range(n)]
        roots = len(set(p))
        q = list(range(n))

        def f(x):
            while q[x] != x:
                q[x] = q[q[x]]
                x = q[x]
            return x

        for u, v, _ in edges[start:]:
            ru, rv = f(p[u]), f(p[v])
            if ru != rv:
                q[ru] = rv
                roots -= 1
                if roots == 1:
                    return True
        return roots == 1

    def rec(i: int, size: int, mask: int) -> None:
        if size == n - 1:
            out.append(mask)
            return
        if i == E:
            return
        u, v, eid = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec(i + 1, size, mask)
            return
        parent[ru] = rv
        rec(i + 1, size + 1, mask | (1 << eid))
        parent[ru] = ru
        if still_connected(i + 1):
            rec(i + 1, size, mask)

    rec(0, 0, 0)
    return out


def psi_enumerate(g: Multigraph, max_edges: int | None = None) -> GraphPolynomial:
    _check_psi_input(g, max_edges)
    full = sum(1 << e.id for e in g.edges)
    terms: dict[int, int] = {}
    for tree in spanning_tree_masks(g):
        mono = full ^ tree
        if mono in terms:
            raise InvariantViolation("spanning tree enumerated twice")
        terms[mono] = 1
    return GraphPolynomial(tuple(sorted(e.id for e in g.edges)), terms)


# -- deletion/contraction ----------------------------------------------


class _Memo:
    """Cache of polynomials keyed by canonical certificate, stored over canonical edge slots."""

    def __init__(self):
        self.table: dict = {}

    @staticmethod
    def slots(g: Multigraph):
        cf = canonical_form(g)
        lab = cf.labeling
        ordered = sorted(
            g.edges, key=lambda e: (min(lab[e.u], lab[e.v]), max(lab[e.u], lab[e.v]), e.id)
        )
        return cf.certificate, [e.id for e in ordered]


def _remap(terms: Mapping[int, int], src: list[int], dst: list[int]) -> dict[int, int]:
    out = {}
    for mask, c in terms.items():
        new = 0
        for pos, eid in enumerate(src):
            if mask >> eid & 1:
                new |= 1 << dst[pos]
        out[new] = c
    return out


def _del_contract(g: Multigraph, memo: _Memo) -> dict[int, int]:
    if g.num_edges == 0:
        return {0: 1} if g.num_vertices == 1 else {}
    cert, slots = memo.slots(g)
    if cert in memo.table:
        # cached over slot indices 0..E-1
        return _remap(memo.table[cert], list(range(len(slots))), slots)

    e = g.edges[0]
    rest = g.edges[1:]
    # deletion: trees avoiding e, which then carries a factor alpha_e
    deleted = Multigraph(g.vertices, rest)
    result: dict[int, int] = {}
    if is_connected(deleted):
        for m, c in _del_contract(deleted, memo).items():
            result[m | (1 << e.id)] = result.get(m | (1 << e.id), 0) + c
    # contraction: merge e.v into e.u; parallel copies of e become loops,
    # which lie in no spanning tree and so contribute their variable
    loops = 0
    kept = []
    for f in rest:
        u = e.u if f.u == e.v else f.u
        v = e.u if f.v == e.v else f.v
        if u == v:
            loops |= 1 << f.id
        else:
            kept.append(WeightedEdge(f.id, u, v, f.weight))
    contracted = Multigraph(tuple(x for x in g.vertices if x != e.v), tuple(kept))
    for m, c in _del_contract(contracted, memo).items():
        result[m | loops] = result.get(m | loops, 0) + c

    memo.table[cert] = _remap(result, slots, list(range(len(slots))))
    return result


def psi_del_contract(g: Multigraph, max_edges: int | None = None) -> GraphPolynomial:
    """Psi via Psi_G = alpha_e Psi_{G-e} + Psi_{G/e}, memoized on canonical forms of minors."""
    _check_psi_input(g, max_edges)
    terms = _del_contract(g, _Memo())
    return GraphPolynomial(tuple(sorted(e.id for e in g.edges)), terms)


# -- numeric evaluation ----------------------------------------------------


def _laplacian_parts(g: Multigraph, order: list[int]):
    """Vertex index map (first vertex grounded) and edge endpoint index arrays."""
    index = {v: i for i, v in enumerate(g.vertices)}
    us = np.array([index[g.edge(eid).u] for eid in order], dtype=np.intp)
    vs = np.array([index[g.edge(eid).v] for eid in order], dtype=np.intp)
    return us, vs


def _grounded_elimination_logdet(cond, us, vs, nv):
    """log det of the grounded Laplacian for a batch of conductance vectors.

    Gaussian elimination written on conductances: eliminating vertex k adds
    c_ik c_kj / d_k to the conductance between i and j and c_ik g_k / d_k to
    the ground conductance of i. Only positive quantities are ever added, so
    no cancellation occurs however disparate the conductances are.
    """
    S = cond.shape[0]
    C = np.zeros((S, nv, nv))
    ground = np.zeros((S, nv))
    for j in range(len(us)):
        u, v = us[j], vs[j]
        if u == 0:
            ground[:, v] += cond[:, j]
        elif v == 0:
            ground[:, u] += cond[:, j]
        else:
            C[:, u, v] += cond[:, j]
            C[:, v, u] += cond[:, j]
    logdet = np.zeros(S)
    for k in range(1, nv):
        row = C[:, k, :].copy()
        d = ground[:, k] + row.sum(axis=1)
        logdet += np.log(d)
        row[:, k] = 0.0
        C[:, k, :] = 0.0
        C[:, :, k] = 0.0
        upd = row[:, :, None] * row[:, None, :] / d[:, None, None]
        idx = np.arange(nv)
        upd[:, idx, idx] = 0.0
        C += upd
        ground += row * (ground[:, k] / d)[:, None]
        ground[:, k] = 0.0
    return logdet


def log_psi_batch(g: Multigraph, alphas: np.ndarray, edge_order: list[int] | None = None) -> np.ndarray:
    """log Psi_G at each row of `alphas` (shape (S, E), columns in `edge_order`)."""
    order = edge_order if edge_order is not None else [e.id for e in g.edges]
    alphas = np.asarray(alphas, dtype=float)
    if np.any(alphas <= 0):
        raise GraphError("psi_eval needs strictly positive coordinates")
    us, vs = _laplacian_parts(g, order)
    logdet = _grounded_elimination_logdet(1.0 / alphas, us, vs, g.num_vertices)
    return np.log(alphas).sum(axis=1) + logdet


def _exact_psi_eval(g: Multigraph, point: Mapping[int, Fraction]) -> Fraction:
    index = {v: i for i, v in enumerate(g.vertices)}
    nv = len(index)
    C = [[Fraction(0)] * nv for _ in range(nv)]
    ground = [Fraction(0)] * nv
    for e in g.edges:
        c = 1 / Fraction(point[e.id])
        u, v = index[e.u], index[e.v]
        if u == 0:
            ground[v] += c
        elif v == 0:
            ground[u] += c
        else:
            C[u][v] += c
            C[v][u] += c
    det = Fraction(1)
    for k in range(1, nv):
        d = ground[k] + sum(C[k][j] for j in range(nv))
        det *= d
        row = C[k][:]
        for i in range(nv):
            C[i][k] = C[k][i] = Fraction(0)
        for i in range(1, nv):
            if row[i] == 0:
                continue
            ground[i] += row[i] * ground[k] / d
            for j in range(1, nv):
                if j != i and row[j]:
                    C[i][j] += row[i] * row[j] / d
        ground[k] = Fraction(0)
    prod = Fraction(1)
    for e in g.edges:
        prod *= Fraction(point[e.id])
    return prod * det


def psi_eval(g: Multigraph, point: Mapping[int, float]):
    """Psi_G(point) via the grounded conductance Laplacian.

    Fraction coordinates give an exact Fraction result; anything else is
    evaluated in floating point.
    """
    if not g.is_ordinary():
        raise GraphError("the graph polynomial is defined here for weight +1 edges only")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    for e in g.edges:
        if e.id not in point:
            raise GraphError(f"no coordinate for edge {e.id}")
        if not point[e.id] > 0:
            raise GraphError(f"coordinate for edge {e.id} must be positive")
    if all(isinstance(point[e.id], (int, Fraction)) for e in g.edges):
        return _exact_psi_eval(g, point)
    order = [e.id for e in g.edges]
    row = np.array([[float(point[eid]) for eid in order]])
    return float(np.exp(log_psi_batch(g, row, order)[0]))


def spanning_tree_count(g: Multigraph) -> int:
    """Matrix-tree determinant over the integers (Bareiss fraction-free elimination)."""
    if not g.is_ordinary():
        raise GraphError("spanning tree count expects all weights +1")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    index = {v: i for i, v in enumerate(g.vertices)}
    nv = len(index)
    if nv <= 1:
        return 1
    L = [[0] * nv for _ in range(nv)]
    for e in g.edges:
        u, v = index[e.u], index[e.v]
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    M = [row[1:] for row in L[1:]]
    n = nv - 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]

