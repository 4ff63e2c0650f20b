"""
Weighted graph families whose perfect matchings produce x_n.

Graphs are assembled on integer coordinates and then relabeled so that
vertex indices increase from left to right. Chain graphs built from
octagons therefore keep a narrow frontier for the matching engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from .config import DEFAULT_CONFIG, ClusterConfig
from .laurent import Monomial
from .types import IndexOutOfFamily, ParseError, UnknownFormat

Point = Tuple[int, int]

ONE = Monomial(0, 0)
X1 = Monomial(1, 0)
X2 = Monomial(0, 1)

WEIGHT_LABELS = {ONE: "1", X1: "x1", X2: "x2"}
LABEL_WEIGHTS = {v: k for k, v in WEIGHT_LABELS.items()}


def weight_label(w: Monomial) -> str:
    try:
        return WEIGHT_LABELS[w]
    except KeyError:
        raise ValueError(f"Edge weight must be 1, x1 or x2, got {w}") from None


class Edge(NamedTuple):
    u: int
    v: int
    weight: Monomial


@dataclass(frozen=True)
class Cell:
    """
    A square or octagon face, given by its member edge indices
    """

    kind: str
    """
    "square" or "octagon"
    """

    edges: Tuple[int, ...]
    """
    Indices into WeightedGraph.edges
    """

    role: str = ""
    """
    Position in the chain: "north", "south", "west", "east", "connector",
    "core" for octagons, "grid" and "single" for standalone squares
    """


@dataclass(frozen=True)
class WeightedGraph:
    """
    Simple graph with monomial edge weights and face metadata
    """

    vertex_count: int
    """
    Vertices are 0 .. vertex_count - 1
    """

    edges: Tuple[Edge, ...] = ()
    """
    Edges with u < v, each weighted 1, x1 or x2
    """

    cells: Tuple[Cell, ...] = ()
    """
    Square and octagon faces
    """

    arcs: Tuple[int, ...] = ()
    """
    Edge indices of the extra arcs (not part of any face)
    """

    tag: str = ""
    """
    Description, e.g. "G_7 (1,4)"
    """

    coords: Tuple[Point, ...] = field(default=(), compare=False)
    """
    Layout coordinates, one per vertex (may be empty for imported graphs)
    """

    @property
    def is_empty(self) -> bool:
        return self.vertex_count == 0

    def adjacency(self) -> List[List[Tuple[int, Monomial, int]]]:
        """(neighbour, weight, edge index) lists per vertex"""
        adj: List[List[Tuple[int, Monomial, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v, w) in enumerate(self.edges):
            adj[u].append((v, w, i))
            adj[v].append((u, w, i))
        return adj

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        arcs = set(self.arcs)
        for i, (u, v, w) in enumerate(self.edges):
            g.add_edge(u, v, weight=weight_label(w), arc=i in arcs)
        return g


EMPTY_GRAPH = WeightedGraph(0, tag="empty")


class _Chain:
    """Coordinate-level graph builder that deduplicates shared vertices and edges"""

    def __init__(self):
        self.index: Dict[Point, int] = {}
        self.points: List[Point] = []
        self.edges: List[Tuple[int, int, Monomial]] = []
        self.edge_index: Dict[FrozenSet[int], int] = {}
        self.cells: List[Tuple[str, str, List[int]]] = []
        self.arcs: List[int] = []

    def vertex(self, p: Point) -> int:
        if p not in self.index:
            self.index[p] = len(self.points)
            self.points.append(p)
        return self.index[p]

    def edge(self, p: Point, q: Point, weight: Monomial) -> int:
        u, v = self.vertex(p), self.vertex(q)
        key = frozenset((u, v))
        if key in self.edge_index:
            i = self.edge_index[key]
            if self.edges[i][2] != weight:
                raise ValueError(f"Shared edge {p}-{q} has conflicting weights")
            return i
        self.edge_index[key] = len(self.edges)
        self.edges.append((u, v, weight))
        return len(self.edges) - 1

    def cell(self, kind: str, role: str, edges: List[int]):
        self.cells.append((kind, role, edges))

    def arc(self, p: Point, q: Point):
        self.arcs.append(self.edge(p, q, ONE))

    def finish(self, tag: str) -> WeightedGraph:
        order = sorted(range(len(self.points)), key=lambda i: self.points[i])
        relabel = {old: new for new, old in enumerate(order)}
        edges = tuple(
            Edge(min(relabel[u], relabel[v]), max(relabel[u], relabel[v]), w)
            for u, v, w in self.edges
        )
        cells = tuple(Cell(kind, tuple(e), role) for kind, role, e in self.cells)
        return WeightedGraph(
            vertex_count=len(self.points),
            edges=edges,
            cells=cells,
            arcs=tuple(self.arcs),
            tag=tag,
            coords=tuple(self.points[i] for i in order),
        )


def _octagon(chain: _Chain, x: int) -> Dict[str, Point]:
    pts = {
        "WB": (x, 1),
        "WT": (x, 2),
        "TL": (x + 1, 3),
        "TR": (x + 2, 3),
        "ET": (x + 3, 2),
        "EB": (x + 3, 1),
        "BR": (x + 2, 0),
        "BL": (x + 1, 0),
    }
    # axis edges weigh 1, diagonals x1
    cycle = [
        ("TL", "TR", ONE),
        ("TR", "ET", X1),
        ("ET", "EB", ONE),
        ("EB", "BR", X1),
        ("BR", "BL", ONE),
        ("BL", "WB", X1),
        ("WB", "WT", ONE),
        ("WT", "TL", X1),
    ]
    edges = [chain.edge(pts[a], pts[b], w) for a, b, w in cycle]
    chain.cell("octagon", "core", edges)
    return pts


def _outer_square(chain: _Chain, pts: Dict[str, Point], side: str, x2_side: str):
    a, b = (pts["TL"], pts["TR"]) if side == "N" else (pts["BL"], pts["BR"])
    dy = 1 if side == "N" else -1
    oa, ob = (a[0], a[1] + dy), (b[0], b[1] + dy)
    edges = [
        chain.edge(a, b, ONE),
        chain.edge(a, oa, X2 if x2_side == "west" else ONE),
        chain.edge(b, ob, X2 if x2_side == "east" else ONE),
        chain.edge(oa, ob, ONE),
    ]
    chain.cell("square", "north" if side == "N" else "south", edges)


def _end_square(chain: _Chain, pts: Dict[str, Point], end: str, x2_row: str):
    t, b = (pts["WT"], pts["WB"]) if end == "W" else (pts["ET"], pts["EB"])
    dx = -1 if end == "W" else 1
    ot, ob = (t[0] + dx, t[1]), (b[0] + dx, b[1])
    edges = [
        chain.edge(t, b, ONE),
        chain.edge(t, ot, X2 if x2_row == "top" else ONE),
        chain.edge(b, ob, X2 if x2_row == "bottom" else ONE),
        chain.edge(ot, ob, ONE),
    ]
    chain.cell("square", "west" if end == "W" else "east", edges)


def _connector(chain: _Chain, left: Dict[str, Point], right: Dict[str, Point], x2_row: str):
    edges = [
        chain.edge(left["ET"], left["EB"], ONE),
        chain.edge(left["ET"], right["WT"], X2 if x2_row == "top" else ONE),
        chain.edge(right["WT"], right["WB"], ONE),
        chain.edge(left["EB"], right["WB"], X2 if x2_row == "bottom" else ONE),
    ]
    chain.cell("square", "connector", edges)


@dataclass
class _ChainPlan:
    """Placement decisions for a left-to-right chain of octagons"""

    extras: List[Tuple[str, ...]]
    arcs: List[Tuple[str, str]]
    connector_rows: List[str]
    square_x2: List[Dict[str, str]]
    west_end: Optional[str] = None
    east_end: Optional[str] = None

    def build(self, tag: str) -> WeightedGraph:
        chain = _Chain()
        octagons = [_octagon(chain, 4 * i) for i in range(len(self.extras))]
        for i, pts in enumerate(octagons):
            for side in self.extras[i]:
                _outer_square(chain, pts, side, self.square_x2[i][side])
        for i, row in enumerate(self.connector_rows):
            _connector(chain, octagons[i], octagons[i + 1], row)
        if self.west_end is not None:
            _end_square(chain, octagons[0], "W", self.west_end)
        if self.east_end is not None:
            _end_square(chain, octagons[-1], "E", self.east_end)
        for i, (left, right) in enumerate(self.arcs):
            chain.arc(octagons[i][left], octagons[i + 1][right])
        return chain.finish(tag)


def _row(extra: str) -> str:
    return "top" if extra == "N" else "bottom"


def _flip(row: str) -> str:
    return "bottom" if row == "top" else "top"


def _corner(column: str, row: str) -> str:
    return ("T" if row == "top" else "B") + ("L" if column == "west" else "R")


def _one_sided_plan(k: int, positive: bool) -> _ChainPlan:
    """
    k octagons with one outer square each.

    Positive graphs end with a southern square on the right and put arcs on
    the east column; negative graphs end with a northern square and use the
    west column.
    """
    last = "S" if positive else "N"
    other = "N" if positive else "S"
    extras = [last if (k - 1 - i) % 2 == 0 else other for i in range(k)]
    column = "east" if positive else "west"
    arcs = [
        (_corner(column, _row(extras[i])), _corner(column, _row(extras[i + 1])))
        for i in range(k - 1)
    ]
    if positive:
        rows = [_row(extras[i]) for i in range(k - 1)]
    else:
        rows = [_row(extras[i + 1]) for i in range(k - 1)]
    x2_side = "west" if positive else "east"
    return _ChainPlan(
        extras=[(e,) for e in extras],
        arcs=arcs,
        connector_rows=rows,
        square_x2=[{e: x2_side} for e in extras],
    )


def _symmetric_plan(half: int, positive: bool) -> _ChainPlan:
    """
    2 * half + 1 octagons symmetric under a half turn about the centre one.

    The centre carries both outer squares in positive graphs and none in
    negative ones. Arcs sit on the columns facing the centre (positive)
    or facing the ends (negative).
    """
    idx = list(range(-half, half + 1))

    def extra(i: int) -> str:
        if i < 0:
            return "S" if -i % 2 else "N"
        return "N" if i % 2 else "S"

    def arc_row(i: int, neighbour: int) -> str:
        if i == 0:
            return _flip(_row(extra(neighbour)))
        return _row(extra(i))

    extras = [(("N", "S") if positive else ()) if i == 0 else (extra(i),) for i in idx]
    arcs = []
    rows = []
    for i in idx[:-1]:
        j = i + 1
        left_half = j <= 0
        if positive:
            column = "east" if left_half else "west"
        else:
            column = "west" if left_half else "east"
        arcs.append((_corner(column, arc_row(i, j)), _corner(column, arc_row(j, i))))
        if positive:
            rows.append(_row(extra(i)) if left_half else _row(extra(j)))
        else:
            rows.append(arc_row(j, i) if left_half else arc_row(i, j))

    square_x2 = []
    for i in idx:
        if i == 0:
            square_x2.append({"N": "west", "S": "east"})
        elif (i < 0) == positive:
            square_x2.append({extra(i): "west"})
        else:
            square_x2.append({extra(i): "east"})

    plan = _ChainPlan(extras=extras, arcs=arcs, connector_rows=rows, square_x2=square_x2)
    if positive:
        if half == 0:
            plan.west_end, plan.east_end = "top", "bottom"
        else:
            plan.west_end = _flip(_row(extra(idx[0])))
            plan.east_end = _flip(_row(extra(idx[-1])))
    return plan


def _single_square(tag: str) -> WeightedGraph:
    chain = _Chain()
    edges = [
        chain.edge((0, 0), (1, 0), ONE),
        chain.edge((1, 0), (1, 1), ONE),
        chain.edge((1, 1), (0, 1), ONE),
        chain.edge((0, 1), (0, 0), X2),
    ]
    chain.cell("square", "single", edges)
    return chain.finish(tag)


def build_H(m: int) -> WeightedGraph:
    """
    The 2-by-m grid of vertices.

    Vertical edges weigh 1; the horizontal pairs alternate x2, x1, x2, ...
    from the left. ``build_H(1)`` is a single edge and ``build_H(0)`` is
    the empty graph.
    """
    if m < 0:
        raise IndexOutOfFamily(f"Grid length must be nonnegative, got {m}")
    chain = _Chain()
    for i in range(m):
        chain.edge((i, 0), (i, 1), ONE)
    for i in range(m - 1):
        w = X2 if i % 2 == 0 else X1
        bottom = chain.edge((i, 0), (i + 1, 0), w)
        top = chain.edge((i, 1), (i + 1, 1), w)
        left = chain.edge((i, 0), (i, 1), ONE)
        right = chain.edge((i + 1, 0), (i + 1, 1), ONE)
        chain.cell("square", "grid", [left, bottom, right, top])
    return chain.finish(f"H_{m}")


def build_G22(n: int) -> WeightedGraph:
    if n < 3:
        raise IndexOutOfFamily(f"G_n for (2,2) needs n >= 3, got {n}")
    g = build_H(2 * n - 4)
    return WeightedGraph(g.vertex_count, g.edges, g.cells, g.arcs, f"G_{n} (2,2)", g.coords)


def build_G14(n: int, config: ClusterConfig | None = None) -> WeightedGraph:
    """
    The (1,4) graph G_n for n outside {1, 2}
    """
    config = config or DEFAULT_CONFIG
    tag = f"G_{n} (1,4)"
    if n in (1, 2):
        raise IndexOutOfFamily(f"G_n for (1,4) is undefined at n={n}")
    if n == 3:
        g = _single_square(tag)
    elif n % 2 and n > 3:
        plan = _one_sided_plan((n - 3) // 2, positive=True)
        plan.west_end = _flip(_row(plan.extras[0][0]))
        plan.east_end = _row(plan.extras[-1][0])
        g = plan.build(tag)
    elif n % 2:
        g = _one_sided_plan((1 - n) // 2, positive=False).build(tag)
    elif n >= 4:
        g = _symmetric_plan((n - 4) // 2, positive=True).build(tag)
    else:
        g = _symmetric_plan(-n // 2, positive=False).build(tag)
    config.logger.debug(f"built {tag}: {g.vertex_count} vertices, {len(g.edges)} edges")
    return g


def build_tildeG14(m: int, config: ClusterConfig | None = None) -> WeightedGraph:
    """
    G_m with its rightmost end square removed (m >= 3) or with an end
    square added on the right (m <= -1). tilde-G_1 and tilde-G_3 are empty.
    """
    config = config or DEFAULT_CONFIG
    if m % 2 == 0:
        raise IndexOutOfFamily(f"tilde-G_m needs odd m, got {m}")
    tag = f"tilde-G_{m} (1,4)"
    if m in (1, 3):
        return WeightedGraph(0, tag=tag)
    if m > 3:
        plan = _one_sided_plan((m - 3) // 2, positive=True)
        plan.west_end = _flip(_row(plan.extras[0][0]))
    else:
        plan = _one_sided_plan((1 - m) // 2, positive=False)
        plan.east_end = _flip(_row(plan.extras[-1][0]))
    g = plan.build(tag)
    config.logger.debug(f"built {tag}: {g.vertex_count} vertices, {len(g.edges)} edges")
    return g


def swap_weights(g: WeightedGraph, tag: str | None = None) -> WeightedGraph:
    """Exchange x1 and x2 edge weights"""
    swap = {X1: X2, X2: X1, ONE: ONE}
    edges = tuple(Edge(u, v, swap[w]) for u, v, w in g.edges)
    return WeightedGraph(g.vertex_count, edges, g.cells, g.arcs, tag or g.tag, g.coords)


def build_G41(n: int, config: ClusterConfig | None = None) -> WeightedGraph:
    """
    The (4,1) graph G_n: G_{3-n} for (1,4) with x1 and x2 exchanged
    """
    if n in (1, 2):
        raise IndexOutOfFamily(f"G_n for (4,1) is undefined at n={n}")
    return swap_weights(build_G14(3 - n, config), f"G_{n} (4,1)")


def disjoint_union(a: WeightedGraph, b: WeightedGraph) -> WeightedGraph:
    shift = a.vertex_count
    offset = len(a.edges)
    edges = a.edges + tuple(Edge(u + shift, v + shift, w) for u, v, w in b.edges)
    cells = a.cells + tuple(
        Cell(c.kind, tuple(e + offset for e in c.edges), c.role) for c in b.cells
    )
    arcs = a.arcs + tuple(e + offset for e in b.arcs)
    coords = ()
    if len(a.coords) == a.vertex_count and len(b.coords) == b.vertex_count:
        # place b to the right of a
        dx = max((x for x, _ in a.coords), default=-2) + 2 - min((x for x, _ in b.coords), default=0)
        coords = a.coords + tuple((x + dx, y) for x, y in b.coords)
    tag = " + ".join(t for t in (a.tag, b.tag) if t)
    return WeightedGraph(a.vertex_count + b.vertex_count, edges, cells, arcs, tag, coords)


def cell_counts(g: WeightedGraph) -> Tuple[int, int]:
    """(squares, octagons)"""
    squares = sum(1 for c in g.cells if c.kind == "square")
    octagons = sum(1 for c in g.cells if c.kind == "octagon")
    return squares, octagons


def _without_vertices(g: WeightedGraph, drop: set, drop_cells: set, tag: str) -> WeightedGraph:
    keep = [v for v in range(g.vertex_count) if v not in drop]
    relabel = {old: new for new, old in enumerate(keep)}
    edge_map: Dict[int, int] = {}
    edges: List[Edge] = []
    for i, (u, v, w) in enumerate(g.edges):
        if u in drop or v in drop:
            continue
        edge_map[i] = len(edges)
        edges.append(Edge(relabel[u], relabel[v], w))
    cells = tuple(
        Cell(c.kind, tuple(edge_map[e] for e in c.edges), c.role)
        for i, c in enumerate(g.cells)
        if i not in drop_cells
    )
    arcs = tuple(edge_map[e] for e in g.arcs if e in edge_map)
    coords = tuple(g.coords[v] for v in keep) if g.coords else ()
    return WeightedGraph(len(keep), tuple(edges), cells, arcs, tag, coords)


def strip_end_squares(g: WeightedGraph) -> WeightedGraph:
    """
    Remove the west and east end squares, keeping the octagon edges they
    were glued to.
    """
    drop_cells = {i for i, c in enumerate(g.cells) if c.role in ("west", "east")}
    drop = set()
    for i in drop_cells:
        cell_vertices = {x for e in g.cells[i].edges for x in g.edges[e][:2]}
        other = {
            x
            for j, c in enumerate(g.cells)
            if j != i
            for e in c.edges
            for x in g.edges[e][:2]
        }
        drop |= cell_vertices - other
    return _without_vertices(g, drop, drop_cells, f"{g.tag} without end squares")


def _edge_match(a: dict, b: dict) -> bool:
    return a["weight"] == b["weight"]


def is_weighted_isomorphic(a: WeightedGraph, b: WeightedGraph) -> bool:
    """Isomorphic as graphs with edge weights, ignoring arc flags and layout"""
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx(), edge_match=_edge_match)


def has_involutive_symmetry(g: WeightedGraph) -> bool:
    """
    Whether some weight-preserving automorphism other than the identity
    is its own inverse.
    """
    ng = g.to_networkx()
    matcher = isomorphism.GraphMatcher(ng, ng, edge_match=_edge_match)
    for sigma in matcher.isomorphisms_iter():
        if all(sigma[v] == v for v in sigma):
            continue
        if all(sigma[sigma[v]] == v for v in sigma):
            return True
    return False


def export(g: WeightedGraph, format: str = "json") -> str:
    """
    Serialize ``g`` as "json" or "dot"
    """
    if format == "json":
        data = {
            "vertices": g.vertex_count,
            "edges": [[u, v, weight_label(w)] for u, v, w in g.edges],
            "cells": [{"kind": c.kind, "role": c.role, "edges": list(c.edges)} for c in g.cells],
            "arcs": list(g.arcs),
            "tag": g.tag,
        }
        if g.coords:
            data["coords"] = [list(p) for p in g.coords]
        return json.dumps(data)
    if format == "dot":
        arcs = set(g.arcs)
        lines = [f'graph "{g.tag}" {{']
        for v in range(g.vertex_count):
            if g.coords:
                x, y = g.coords[v]
                lines.append(f'  {v} [pos="{x},{y}!"];')
            else:
                lines.append(f"  {v};")
        for i, (u, v, w) in enumerate(g.edges):
            attrs = f'label="{weight_label(w)}"'
            if i in arcs:
                attrs += ", style=dashed, arc=true"
            lines.append(f"  {u} -- {v} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"Unknown graph format: {format}")


def import_graph(text: str, format: str = "json") -> WeightedGraph:
    """
    Inverse of ``export(g, "json")``
    """
    if format != "json":
        raise UnknownFormat(f"Cannot import graph format: {format}")
    try:
        data = json.loads(text)
        n = int(data["vertices"])
        edges = tuple(Edge(int(u), int(v), LABEL_WEIGHTS[str(w)]) for u, v, w in data["edges"])
        cells = tuple(
            Cell(c["kind"], tuple(int(e) for e in c["edges"]), c.get("role", ""))
            for c in data.get("cells", [])
        )
        arcs = tuple(int(e) for e in data.get("arcs", []))
        coords = tuple(tuple(p) for p in data.get("coords", []))
        tag = str(data.get("tag", ""))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"Malformed graph JSON: {e}") from None
    seen = set()
    for u, v, _ in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"Bad edge ({u}, {v}) for {n} vertices")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"Duplicate edge ({u}, {v})")
        seen.add(key)
    edges = tuple(Edge(min(u, v), max(u, v), w) for u, v, w in edges)
    return WeightedGraph(n, edges, cells, arcs, tag, coords)


def family_graph(family: str, n: int, tilde: bool = False, config: ClusterConfig | None = None):
    """
    Dispatch on a family name: "22", "14" or "41"
    """
    if family == "22":
        if tilde:
            raise IndexOutOfFamily("tilde graphs exist only for the (1,4) family")
        return build_G22(n)
    if family == "14":
        return build_tildeG14(n, config) if tilde else build_G14(n, config)
    if family == "41":
        if tilde:
            raise IndexOutOfFamily("tilde graphs exist only for the (1,4) family")
        return build_G41(n, config)
    raise IndexOutOfFamily(f"Unknown graph family: {family}")

