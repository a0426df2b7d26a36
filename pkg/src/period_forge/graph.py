"""Weighted multigraphs with optional rotation systems and named marker vertices.

Weight +1 is an ordinary propagator; a negative weight -w is an inverse
propagator of weight w and only takes part in degree bookkeeping.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import GraphError

MARKER_NAMES = ("a", "b", "zero", "infinity")


@dataclass(frozen=True, order=True)
class WeightedEdge:
    id: int
    u: int
    v: int
    weight: int = 1

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an endpoint of edge {self.id}")

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple[int, ...]
    edges: tuple[WeightedEdge, ...]
    rotation: Mapping[int, tuple[int, ...]] | None = None
    markers: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.rotation is not None:
            object.__setattr__(
                self, "rotation", {int(v): tuple(c) for v, c in self.rotation.items()}
            )
        object.__setattr__(self, "markers", dict(self.markers))
        self._validate()

    def _validate(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex identifiers")
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if e.u not in vset or e.v not in vset:
                raise GraphError(f"edge {e.id} has an undeclared endpoint")
            if e.u == e.v:
                raise GraphError(f"edge {e.id} is a self-loop")
            if e.weight == 0 or not isinstance(e.weight, int):
                raise GraphError(f"edge {e.id} must have a nonzero integer weight")
        for name, v in self.markers.items():
            if name not in MARKER_NAMES:
                raise GraphError(f"unknown marker name {name!r}")
            if v not in vset:
                raise GraphError(f"marker {name!r} points at unknown vertex {v}")
        if self.rotation is not None:
            inc = self.incidence()
            for v in self.vertices:
                cyc = self.rotation.get(v, ())
                if sorted(cyc) != sorted(e.id for e in inc[v]):
                    raise GraphError(f"rotation at vertex {v} does not list its incident edges once each")

    # -- basic queries -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> WeightedEdge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise GraphError(f"unknown edge {eid}")

    def edge_map(self) -> dict[int, WeightedEdge]:
        return {e.id: e for e in self.edges}

    def incidence(self) -> dict[int, list[WeightedEdge]]:
        inc: dict[int, list[WeightedEdge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return inc

    def neighbors(self, v: int) -> list[int]:
        return [e.other(v) for e in self.edges if v in (e.u, e.v)]

    def next_edge_id(self) -> int:
        return max((e.id for e in self.edges), default=-1) + 1

    def next_vertex(self) -> int:
        return max(self.vertices, default=-1) + 1

    def is_ordinary(self) -> bool:
        return all(e.weight == 1 for e in self.edges)

    def replace(self, **changes) -> Multigraph:
        data = dict(
            vertices=self.vertices, edges=self.edges, rotation=self.rotation, markers=self.markers
        )
        data.update(changes)
        return Multigraph(**data)

    def relabel(self, mapping: Mapping[int, int]) -> Multigraph:
        """Rename vertices through `mapping` (must be a bijection onto new labels)."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise GraphError("relabeling is not injective")
        edges = [WeightedEdge(e.id, mapping[e.u], mapping[e.v], e.weight) for e in self.edges]
        rot = None
        if self.rotation is not None:
            rot = {mapping[v]: c for v, c in self.rotation.items()}
        markers = {k: mapping[v] for k, v in self.markers.items()}
        return Multigraph(sorted(mapping[v] for v in self.vertices), edges, rot, markers)


def make_graph(
    num_vertices: int | Iterable[int],
    edges: Iterable[tuple[int, int] | tuple[int, int, int]],
    markers: Mapping[str, int] | None = None,
) -> Multigraph:
    """Build a graph from (u, v[, weight]) tuples, assigning edge ids 0, 1, 2, ..."""
    verts = range(num_vertices) if isinstance(num_vertices, int) else num_vertices
    wedges = []
    for i, t in enumerate(edges):
        w = t[2] if len(t) > 2 else 1
        wedges.append(WeightedEdge(i, t[0], t[1], w))
    return Multigraph(tuple(verts), tuple(wedges), None, markers or {})


def weighted_degree(g: Multigraph, v: int) -> int:
    if v not in set(g.vertices):
        raise GraphError(f"unknown vertex {v}")
    return sum(e.weight for e in g.edges if v == e.u or v == e.v)


def degrees(g: Multigraph) -> dict[int, int]:
    deg = {v: 0 for v in g.vertices}
    for e in g.edges:
        deg[e.u] += e.weight
        deg[e.v] += e.weight
    return deg


def components(g: Multigraph, removed: Iterable[int] = ()) -> list[set[int]]:
    """Connected components of g with the `removed` vertices (and their edges) deleted."""
    gone = set(removed)
    parent = {v: v for v in g.vertices if v not in gone}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        if e.u in gone or e.v in gone:
            continue
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, set[int]] = {}
    for v in parent:
        comps.setdefault(find(v), set()).add(v)
    return sorted(comps.values(), key=min)


def is_connected(g: Multigraph) -> bool:
    return len(components(g)) <= 1


def loop_number(g: Multigraph) -> int:
    if not g.is_ordinary():
        raise GraphError("loop number is defined for graphs with all weights +1")
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    return g.num_edges - g.num_vertices + 1


def split_by_cut(g: Multigraph, cut: Iterable[int]) -> list[set[int]]:
    cut = list(cut)
    if len(set(cut)) != len(cut):
        raise GraphError("cut vertices must be distinct")
    vset = set(g.vertices)
    for c in cut:
        if c not in vset:
            raise GraphError(f"cut vertex {c} not in graph")
    return components(g, cut)


def rotation_from_positions(g: Multigraph, pos: Mapping[int, tuple[float, float]]) -> dict[int, tuple[int, ...]]:
    """Counterclockwise rotation system of a straight-line drawing.

    Only meaningful when the drawing has no crossings and no two edges at a
    vertex leave in the same direction.
    """
    rot = {}
    for v, inc in g.incidence().items():
        x0, y0 = pos[v]

        def angle(e, v=v, x0=x0, y0=y0):
            x1, y1 = pos[e.other(v)]
            return math.atan2(y1 - y0, x1 - x0)

        rot[v] = tuple(e.id for e in sorted(inc, key=lambda e: (angle(e), e.id)))
    return rot
