"""Completion, decompletion, the twist at a four-vertex cut, planar duality,
and the reduction chain G_{k,l,m} -> ... -> G_{k+m-1,l,1} = Z_{2(k+l+m)}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .canon import find_isomorphism, is_isomorphic
from .errors import GraphError, InvariantViolation, NotCompletableError, PlanarityError
from .families import FamilyParams, family_graph, family_layout, zigzag
from .graph import Multigraph, WeightedEdge, degrees, is_connected, split_by_cut

log = logging.getLogger(__name__)

CUT_ORDER = ("a", "b", "zero", "infinity")


def _is_four_regular(g: Multigraph) -> bool:
    return all(d == 4 for d in degrees(g).values())


def complete(g: Multigraph) -> Multigraph:
    if not g.is_ordinary():
        raise GraphError("completion expects all edge weights +1")
    if not is_connected(g):
        raise GraphError("completion expects a connected graph")
    deg = degrees(g)
    low = [v for v in g.vertices if deg[v] < 3]
    if low:
        raise GraphError(f"vertices of degree < 3 cannot be completed: {low}")
    inf = g.next_vertex()
    eid = g.next_edge_id()
    new = list(g.edges)
    for v in g.vertices:
        for _ in range(4 - deg[v]):
            new.append(WeightedEdge(eid, v, inf, 1))
            eid += 1
    for v in g.vertices:
        if deg[v] > 4:
            new.append(WeightedEdge(eid, v, inf, -(deg[v] - 4)))
            eid += 1
    inf_deg = sum(e.weight for e in new if inf in (e.u, e.v))
    if inf_deg != 4:
        raise NotCompletableError(
            f"not completable to 4-regular: the added vertex would have weighted degree {inf_deg}"
        )
    markers = dict(g.markers)
    markers["infinity"] = inf
    return Multigraph(g.vertices + (inf,), tuple(new), None, markers)


def decomplete(g: Multigraph, v: int) -> Multigraph:
    if v not in set(g.vertices):
        raise GraphError(f"unknown vertex {v}")
    bad = [e.id for e in g.edges if e.weight < 0 and v not in (e.u, e.v)]
    if bad:
        raise GraphError(f"negative edges {bad} are not incident to vertex {v}")
    keep = tuple(e for e in g.edges if v not in (e.u, e.v))
    if any(e.weight != 1 for e in keep):
        raise GraphError("decompletion would leave edges of weight other than +1")
    markers = {k: x for k, x in g.markers.items() if x != v}
    return Multigraph(tuple(x for x in g.vertices if x != v), keep, None, markers)


@dataclass(frozen=True)
class TwistResult:
    graph: Multigraph
    t1: int
    t2: int


def _normalize_pair(edges: list[WeightedEdge], x: int, y: int, net: int, next_id: int):
    """Rewrite the x-y bundle to carry total weight `net`: positive weight as
    unit parallel edges, negative weight as one edge, zero as nothing."""
    pair = frozenset((x, y))
    old = sorted(e.id for e in edges if e.ends == pair)
    rest = [e for e in edges if e.ends != pair]
    ids = list(old)
    out = []
    if net > 0:
        while len(ids) < net:
            ids.append(next_id)
            next_id += 1
        out = [WeightedEdge(i, x, y, 1) for i in ids[:net]]
    elif net < 0:
        if not ids:
            ids.append(next_id)
            next_id += 1
        out = [WeightedEdge(ids[0], x, y, net)]
    return rest + out, next_id


def twist_detailed(g: Multigraph, cut: tuple[int, int, int, int], side: int) -> TwistResult:
    a, b, zero, inf = cut
    deg = degrees(g)
    if any(d != 4 for d in deg.values()):
        raise GraphError("twist expects a weighted-4-regular graph")
    comps = split_by_cut(g, cut)
    if len(comps) < 2:
        raise GraphError("the four vertices do not separate the graph")
    chosen = next((c for c in comps if side in c), None)
    if chosen is None:
        raise GraphError(f"side vertex {side} is not in any component of the cut complement")

    swap = {a: b, b: a, zero: inf, inf: zero}
    edges = []
    for e in g.edges:
        if e.u in chosen and e.v in swap:
            e = WeightedEdge(e.id, e.u, swap[e.v], e.weight)
        elif e.v in chosen and e.u in swap:
            e = WeightedEdge(e.id, swap[e.u], e.v, e.weight)
        edges.append(e)

    excess = {x: -4 for x in cut}
    for e in edges:
        for x in (e.u, e.v):
            if x in excess:
                excess[x] += e.weight
    # t1 moves weight from {a,0} to {b,inf}; t2 from {0,b} to {inf,a}
    s1 = excess[zero] + excess[a]
    s2 = excess[zero] - excess[a]
    if s1 % 2 or s2 % 2:
        raise InvariantViolation(f"rebalancing has no integral solution (excess {excess})")
    t1, t2 = s1 // 2, s2 // 2
    if excess[b] + t1 - t2 != 0 or excess[inf] + t1 + t2 != 0:
        raise InvariantViolation(f"rebalancing system is inconsistent (excess {excess})")

    def net(x, y):
        pair = frozenset((x, y))
        return sum(e.weight for e in edges if e.ends == pair)

    target = {
        (a, zero): net(a, zero) - t1,
        (b, inf): net(b, inf) + t1,
        (zero, b): net(zero, b) - t2,
        (inf, a): net(inf, a) + t2,
    }
    next_id = g.next_edge_id()
    for (x, y), w in target.items():
        edges, next_id = _normalize_pair(edges, x, y, w, next_id)
    edges.sort(key=lambda e: e.id)
    out = Multigraph(g.vertices, tuple(edges), None, g.markers)
    if not _is_four_regular(out):
        raise InvariantViolation("twisted graph is not weighted-4-regular")
    if sum(e.weight for e in out.edges) != sum(e.weight for e in g.edges):
        raise InvariantViolation("twist changed the total edge weight")
    return TwistResult(out, t1, t2)


def twist(g: Multigraph, cut: tuple[int, int, int, int], side: int) -> Multigraph:
    """Swap one side's attachments a<->b and 0<->inf, then rebalance on the four-cycle a-0-b-inf."""
    return twist_detailed(g, cut, side).graph


def marker_cut(g: Multigraph) -> tuple[int, int, int, int]:
    try:
        return tuple(g.markers[name] for name in CUT_ORDER)
    except KeyError as exc:
        raise GraphError(f"graph lacks marker {exc.args[0]!r}") from None


# -- planar duality ---------------------------------------------------


def trace_faces(g: Multigraph) -> list[list[tuple[int, int]]]:
    """Faces of the rotation system as lists of darts (edge id, tail vertex)."""
    if g.rotation is None:
        raise GraphError("planar dual needs a rotation system")
    emap = g.edge_map()
    succ: dict[tuple[int, int], int] = {}
    for v, cyc in g.rotation.items():
        for i, eid in enumerate(cyc):
            succ[(v, eid)] = cyc[(i + 1) % len(cyc)]
    seen = set()
    faces = []
    for e in sorted(g.edges, key=lambda e: e.id):
        for tail in (e.u, e.v):
            dart = (e.id, tail)
            if dart in seen:
                continue
            face = []
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                eid, t = dart
                head = emap[eid].other(t)
                nxt = succ[(head, eid)]
                dart = (nxt, head)
            faces.append(face)
    return faces


def planar_dual(g: Multigraph) -> Multigraph:
    if not g.is_ordinary():
        raise GraphError("planar dual expects all edge weights +1")
    if not is_connected(g):
        raise GraphError("planar dual expects a connected graph")
    faces = trace_faces(g)
    if g.num_vertices - g.num_edges + len(faces) != 2:
        raise PlanarityError("rotation not planar (Euler characteristic check failed)")
    face_of = {}
    for f, darts in enumerate(faces):
        for d in darts:
            face_of[d] = f
    edges = []
    for e in g.edges:
        fu, fv = face_of[(e.id, e.u)], face_of[(e.id, e.v)]
        if fu == fv:
            raise GraphError(f"edge {e.id} is a bridge; its dual would be a self-loop")
        edges.append(WeightedEdge(e.id, fu, fv, 1))
    rotation = {f: tuple(eid for eid, _ in darts) for f, darts in enumerate(faces)}
    return Multigraph(tuple(range(len(faces))), tuple(edges), rotation, {})


# -- the reduction chain ------------------------------------------------


@dataclass
class ChainStep:
    index: int
    params_before: tuple[int, int, int]
    params_after: tuple[int, int, int]
    completed: Multigraph
    twisted: Multigraph
    decompleted: Multigraph
    t1: int
    t2: int
    twisted_matches_completed_family: bool
    decompleted_matches_family: bool

    @property
    def ok(self) -> bool:
        return self.twisted_matches_completed_family and self.decompleted_matches_family


@dataclass
class ChainReport:
    params: tuple[int, int, int]
    initial: Multigraph
    steps: list[ChainStep] = field(default_factory=list)
    final: Multigraph | None = None
    final_matches_zigzag: bool = False

    @property
    def verdict(self) -> bool:
        return all(s.ok for s in self.steps) and self.final_matches_zigzag

    def summary(self) -> dict:
        k, l, m = self.params
        return {
            "params": {"k": k, "l": l, "m": m},
            "n": 2 * (k + l + m),
            "steps": [
                {
                    "index": s.index,
                    "from": list(s.params_before),
                    "to": list(s.params_after),
                    "t1": s.t1,
                    "t2": s.t2,
                    "twisted_isomorphic_to_completed_family": s.twisted_matches_completed_family,
                    "decompleted_isomorphic_to_family": s.decompleted_matches_family,
                }
                for s in self.steps
            ],
            "final_isomorphic_to_zigzag": self.final_matches_zigzag,
            "verdict": self.verdict,
        }


def reduce_to_zigzag(p: FamilyParams) -> ChainReport:
    """Run the twist chain on G_{k,l,m}, checking every intermediate graph by isomorphism.

    At each step the current graph is matched against the generated family
    member so that the roles a, b, 0 and the left side (vertex s_1) can be
    read off through the witness.
    """
    k, l, m = p.k, p.l, p.m
    current, _ = family_layout(p)
    report = ChainReport((k, l, m), current)
    for i in range(m - 1):
        before = FamilyParams(k + i, l, m - i)
        after = FamilyParams(k + i + 1, l, m - i - 1)
        ref, lay = family_layout(before)
        phi = find_isomorphism(ref, current)
        if phi is None:
            log.error("step %d: current graph is not isomorphic to G%s", i, (before.k, before.l, before.m))
            report.final = current
            return report
        a, b, zero, side = phi[lay.apex], phi[lay.top[1]], phi[lay.bottom[1]], phi[lay.left_outer[0]]
        completed = complete(current.replace(markers={"a": a, "b": b, "zero": zero}))
        res = twist_detailed(completed, marker_cut(completed), side)
        target = complete(family_graph(after))
        ok_twist = is_isomorphic(res.graph, target)
        down = decomplete(res.graph, completed.markers["infinity"])
        ok_down = is_isomorphic(down, family_graph(after))
        report.steps.append(
            ChainStep(i, (before.k, before.l, before.m), (after.k, after.l, after.m),
                      completed, res.graph, down, res.t1, res.t2, ok_twist, ok_down)
        )
        log.info("step %d: G%s -> G%s twist_ok=%s", i, report.steps[-1].params_before,
                 report.steps[-1].params_after, ok_twist)
        current = down
    report.final = current
    report.final_matches_zigzag = is_isomorphic(current, zigzag(p.n))
    return report
