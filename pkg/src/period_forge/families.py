"""Generators for the zig-zag graphs and the triangle/box ladder family G_{k,l,m}.

Vertex and edge identifiers are assigned in a fixed order so that serialized
output is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import Multigraph, WeightedEdge, rotation_from_positions


@dataclass(frozen=True)
class FamilyParams:
    k: int
    l: int
    m: int

    def __post_init__(self):
        for name in ("k", "l", "m"):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise GraphError(f"family parameter {name} must be a positive integer, got {val!r}")

    @property
    def n(self) -> int:
        return 2 * (self.k + self.l + self.m)


def _circulant_edges(size: int) -> list[tuple[int, int]]:
    out = []
    for i in range(size):
        out.append((i, (i + 1) % size))
        out.append((i, (i + 2) % size))
    return out


def zigzag_completed(n: int) -> Multigraph:
    """The (1,2)-circulant on n+2 vertices, i.e. the completed zig-zag graph."""
    if n < 3:
        raise GraphError("zig-zag graphs need n >= 3")
    size = n + 2
    edges = [WeightedEdge(i, u, v, 1) for i, (u, v) in enumerate(_circulant_edges(size))]
    return Multigraph(tuple(range(size)), tuple(edges))


def zigzag(n: int) -> Multigraph:
    """Z_n: the completed zig-zag with vertex n+1 removed; edge ids renumbered densely."""
    if n < 3:
        raise GraphError("zig-zag graphs need n >= 3")
    drop = n + 1
    pairs = [(u, v) for u, v in _circulant_edges(n + 2) if drop not in (u, v)]
    edges = [WeightedEdge(i, u, v, 1) for i, (u, v) in enumerate(pairs)]
    return Multigraph(tuple(range(n + 1)), tuple(edges))


@dataclass(frozen=True)
class FamilyLayout:
    """Vertex roles of a generated G_{k,l,m}.

    top/bottom are the box-ladder rails T_0..T_m and U_0..U_m. The left strip
    has inner column T_0, r_1, ..., r_{k-1}, U_0 and outer column s_1..s_k;
    the right strip mirrors it.
    """

    params: FamilyParams
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    left_inner: tuple[int, ...]
    left_outer: tuple[int, ...]
    right_inner: tuple[int, ...]
    right_outer: tuple[int, ...]
    apex: int
    positions: dict[int, tuple[float, float]]


def _strip(inner: list[int], outer: list[int]) -> list[tuple[int, int]]:
    """Triangle strip: two paths joined by a zigzag, giving 2k-1 triangles."""
    k = len(outer)
    pairs = [(inner[i], inner[i + 1]) for i in range(k)]
    pairs += [(outer[i], outer[i + 1]) for i in range(k - 1)]
    for i in range(k):
        pairs.append((inner[i], outer[i]))
        pairs.append((outer[i], inner[i + 1]))
    return pairs


def family_layout(p: FamilyParams) -> tuple[Multigraph, FamilyLayout]:
    k, l, m = p.k, p.l, p.m
    nxt = iter(range(10**6))
    top = [next(nxt) for _ in range(m + 1)]
    bottom = [next(nxt) for _ in range(m + 1)]
    r_left = [next(nxt) for _ in range(k - 1)]
    s_left = [next(nxt) for _ in range(k)]
    r_right = [next(nxt) for _ in range(l - 1)]
    s_right = [next(nxt) for _ in range(l)]
    apex = next(nxt)

    inner_left = [top[0], *r_left, bottom[0]]
    inner_right = [top[m], *r_right, bottom[m]]

    pairs: list[tuple[int, int]] = []
    pairs += [(top[i], top[i + 1]) for i in range(m)]
    pairs += [(bottom[i], bottom[i + 1]) for i in range(m)]
    pairs += [(top[i], bottom[i]) for i in range(1, m)]
    pairs += _strip(inner_left, s_left)
    pairs += _strip(inner_right, s_right)
    pairs += [(apex, s_left[0])] + [(apex, t) for t in top] + [(apex, s_right[0])]

    # straight-line drawing following the figure; the apex sits high enough
    # that its edges to s_1 and s'_1 pass above T_0 and T_m
    pos: dict[int, tuple[float, float]] = {}
    for i in range(m + 1):
        pos[top[i]] = (float(i), 1.0)
        pos[bottom[i]] = (float(i), 0.0)
    for j, v in enumerate(r_left, start=1):
        pos[v] = (0.0, 1.0 - j / k)
    for j, v in enumerate(s_left, start=1):
        pos[v] = (-1.0, 1.0 - (j - 0.5) / k)
    for j, v in enumerate(r_right, start=1):
        pos[v] = (float(m), 1.0 - j / l)
    for j, v in enumerate(s_right, start=1):
        pos[v] = (m + 1.0, 1.0 - (j - 0.5) / l)
    pos[apex] = (m / 2.0, m + 2.0)

    edges = [WeightedEdge(i, u, v, 1) for i, (u, v) in enumerate(pairs)]
    bare = Multigraph(tuple(range(apex + 1)), tuple(edges))
    g = bare.replace(
        rotation=rotation_from_positions(bare, pos),
        markers={"a": apex, "b": top[1], "zero": bottom[1]},
    )
    layout = FamilyLayout(
        p, tuple(top), tuple(bottom), tuple(inner_left), tuple(s_left),
        tuple(inner_right), tuple(s_right), apex, pos,
    )
    return g, layout


def family_graph(p: FamilyParams) -> Multigraph:
    return family_layout(p)[0]


def family_dual(p: FamilyParams) -> Multigraph:
    from .transforms import planar_dual

    return planar_dual(family_graph(p))
