"""Graph JSON format and byte-stable JSON output."""
from __future__ import annotations

import json
from typing import Any

from .errors import GraphError
from .graph import MARKER_NAMES, Multigraph, WeightedEdge


class GraphFormatError(GraphError):
    pass


def graph_to_dict(g: Multigraph) -> dict:
    out: dict[str, Any] = {
        "vertices": sorted(g.vertices),
        "edges": [[e.u, e.v, e.weight, e.id] for e in sorted(g.edges, key=lambda e: e.id)],
    }
    if g.rotation is not None:
        out["rotation"] = {str(v): list(g.rotation[v]) for v in sorted(g.rotation)}
    if g.markers:
        out["markers"] = {k: g.markers[k] for k in sorted(g.markers)}
    return out


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def graph_from_dict(data: Any) -> Multigraph:
    if not isinstance(data, dict):
        raise GraphFormatError("top level: expected a JSON object")
    unknown = set(data) - {"vertices", "edges", "rotation", "markers"}
    if unknown:
        raise GraphFormatError(f"top level: unknown keys {sorted(unknown)}")
    for key in ("vertices", "edges"):
        if key not in data:
            raise GraphFormatError(f"top level: missing key {key!r}")
    if not isinstance(data["vertices"], list):
        raise GraphFormatError("vertices: expected an array")
    verts = [_int(v, f"vertices[{i}]") for i, v in enumerate(data["vertices"])]
    if not isinstance(data["edges"], list):
        raise GraphFormatError("edges: expected an array")
    edges = []
    for i, item in enumerate(data["edges"]):
        if not isinstance(item, list) or len(item) != 4:
            raise GraphFormatError(f"edges[{i}]: expected [u, v, weight, id]")
        u, v, w, eid = (_int(x, f"edges[{i}][{j}]") for j, x in enumerate(item))
        edges.append(WeightedEdge(eid, u, v, w))
    rotation = None
    if "rotation" in data:
        if not isinstance(data["rotation"], dict):
            raise GraphFormatError("rotation: expected an object")
        rotation = {}
        for key, cyc in data["rotation"].items():
            try:
                v = int(key)
            except ValueError:
                raise GraphFormatError(f"rotation: key {key!r} is not a vertex") from None
            if not isinstance(cyc, list):
                raise GraphFormatError(f"rotation[{key}]: expected an array of edge ids")
            rotation[v] = tuple(_int(x, f"rotation[{key}]") for x in cyc)
    markers = {}
    if "markers" in data:
        if not isinstance(data["markers"], dict):
            raise GraphFormatError("markers: expected an object")
        for name, v in data["markers"].items():
            if name not in MARKER_NAMES:
                raise GraphFormatError(f"markers: unknown name {name!r}")
            markers[name] = _int(v, f"markers[{name}]")
    try:
        return Multigraph(tuple(verts), tuple(edges), rotation, markers)
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(f"invalid graph: {exc}") from None


def loads_graph(text: str) -> Multigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return graph_from_dict(data)


def read_graph(path: str) -> Multigraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads_graph(text)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None


def _stable(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _stable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stable(x) for x in obj]
    return obj


def dumps_stable(obj) -> str:
    """JSON with sorted keys and floats rounded to 12 significant digits."""
    return json.dumps(_stable(obj), sort_keys=True) + "\n"


def dumps_graph(g: Multigraph) -> str:
    return dumps_stable(graph_to_dict(g))


def write_graph(g: Multigraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))
