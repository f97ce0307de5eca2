"""Directed graphs: path quasi-distances, capped gauges, and edge energies.

Shortest paths use a heap-based label-setting method over nonnegative costs.
Both difference operators on an edge u -> v have the same magnitude, so the
forward and backward energies of one edge family coincide; direction
dependence enters through per-edge functions, measures, or cost schedules.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Mapping

from .extreal import INF, ensure_ext, format_ext, parse_ext
from .gauges import GaugeSpec, make_min_cap
from .luxemburg import DEFAULT_LAMBDA_MAX, DEFAULT_TOL, luxemburg_infimum
from .profiles import ScaleGrid

log = logging.getLogger("quasimod.graphs")


@dataclass(frozen=True)
class Edge:
    u: object
    v: object
    mu: float
    cost: float

    def __post_init__(self):
        if not self.mu > 0:
            raise ValueError(f"edge measure must be positive, got {self.mu!r}")
        ensure_ext(self.cost, "edge cost")
        if self.cost == INF:
            raise ValueError("edge costs must be finite")


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple
    edges: tuple[Edge, ...]
    measure: Mapping | None = None

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise ValueError("graph needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertices must be distinct")
        object.__setattr__(self, "vertices", vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        index = {v: i for i, v in enumerate(vertices)}
        for e in edges:
            if e.u not in index or e.v not in index:
                raise ValueError(f"edge {e.u!r} -> {e.v!r} uses unknown vertices")
        measure = {v: 1.0 for v in vertices}
        if self.measure is not None:
            measure.update(self.measure)
        for v, m in measure.items():
            if v not in index:
                raise ValueError(f"measure for unknown vertex {v!r}")
            if not m > 0:
                raise ValueError(f"vertex measure must be positive, got {m!r}")
        object.__setattr__(self, "measure", measure)
        object.__setattr__(self, "_index", index)
        fwd = [[] for _ in vertices]
        bwd = [[] for _ in vertices]
        for k, e in enumerate(edges):
            fwd[index[e.u]].append((index[e.v], k))
            bwd[index[e.v]].append((index[e.u], k))
        object.__setattr__(self, "_fwd", tuple(map(tuple, fwd)))
        object.__setattr__(self, "_bwd", tuple(map(tuple, bwd)))

    def index_of(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def transpose(self) -> "DirectedGraph":
        return DirectedGraph(self.vertices,
                             tuple(Edge(e.v, e.u, e.mu, e.cost)
                                   for e in self.edges),
                             dict(self.measure))


def _edge_costs(g: DirectedGraph, costs) -> tuple[float, ...]:
    if costs is None:
        return tuple(e.cost for e in g.edges)
    costs = tuple(float(c) for c in costs)
    if len(costs) != len(g.edges):
        raise ValueError(f"need one cost per edge ({len(g.edges)}), "
                         f"got {len(costs)}")
    for c in costs:
        ensure_ext(c, "edge cost")
        if c == INF:
            raise ValueError("edge costs must be finite")
    return costs


def _dijkstra(g: DirectedGraph, src: int, costs, adjacency) -> list[float]:
    dist = [INF] * len(g.vertices)
    dist[src] = 0.0
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, k in adjacency[u]:
            nd = d + costs[k]
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def forward_distance(g: DirectedGraph, x, y, costs=None) -> float:
    """Least total cost over directed paths x to y; +inf when unreachable."""
    costs = _edge_costs(g, costs)
    return _dijkstra(g, g.index_of(x), costs, g._fwd)[g.index_of(y)]


def backward_distance(g: DirectedGraph, x, y, costs=None) -> float:
    """forward_distance with every edge reversed."""
    costs = _edge_costs(g, costs)
    return _dijkstra(g, g.index_of(x), costs, g._bwd)[g.index_of(y)]


def distance_matrix(g: DirectedGraph, costs=None,
                    backward: bool = False) -> dict:
    costs = _edge_costs(g, costs)
    adjacency = g._bwd if backward else g._fwd
    out = {}
    for i, x in enumerate(g.vertices):
        row = _dijkstra(g, i, costs, adjacency)
        for j, y in enumerate(g.vertices):
            out[(x, y)] = row[j]
    return out


def graph_gauge(g: DirectedGraph, costs=None, grid: ScaleGrid | None = None,
                name: str = "graph_gauge") -> GaugeSpec:
    """Additive gauge w(x, y, t) = min(path distance, t) over the vertices."""
    return make_min_cap(distance_matrix(g, costs), g.vertices, grid, name=name)


@dataclass(frozen=True)
class EdgeOrliczFamily:
    """Per-edge growth functions phi(e, t'), convex with phi(e, 0) = 0."""

    kind: str
    p: float
    q: float | None = None
    a: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("power", "double_phase"):
            raise ValueError(f"unknown edge family kind {self.kind!r}")
        if not self.p >= 1:
            raise ValueError(f"exponent p must be >= 1, got {self.p!r}")
        if self.kind == "double_phase":
            if self.q is None or not self.q > self.p:
                raise ValueError(f"double phase needs q > p, got q={self.q!r}")
            if self.a is None or any(not c >= 0 for c in self.a):
                raise ValueError("double phase needs nonnegative coefficients")
            object.__setattr__(self, "a", tuple(float(c) for c in self.a))

    @classmethod
    def power(cls, p: float) -> "EdgeOrliczFamily":
        return cls("power", p)

    @classmethod
    def double_phase(cls, p: float, q: float, a) -> "EdgeOrliczFamily":
        return cls("double_phase", p, q, tuple(a))

    def value(self, edge_index: int, t: float) -> float:
        if not t >= 0:
            raise ValueError(f"argument must be nonnegative, got {t!r}")
        if self.kind == "power":
            return t ** self.p
        if edge_index >= len(self.a):
            raise ValueError(f"no coefficient for edge {edge_index}")
        return t ** self.p + self.a[edge_index] * t ** self.q


def _gradient_energy(g: DirectedGraph, f: Mapping,
                     phi: EdgeOrliczFamily) -> float:
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise ValueError(f"function misses vertices {missing!r}")
    return sum(e.mu * phi.value(k, abs(f[e.v] - f[e.u]))
               for k, e in enumerate(g.edges))


def forward_energy(g: DirectedGraph, f: Mapping,
                   phi: EdgeOrliczFamily) -> float:
    """Sum over edges of mu(e) * phi(e, |f(head) - f(tail)|)."""
    return _gradient_energy(g, f, phi)


def backward_energy(g: DirectedGraph, f: Mapping,
                    phi: EdgeOrliczFamily) -> float:
    """Same magnitudes as forward_energy: |f(u) - f(v)| = |f(v) - f(u)|."""
    return _gradient_energy(g, f, phi)


def energy_luxemburg(g: DirectedGraph, f: Mapping, phi: EdgeOrliczFamily,
                     tol: float = DEFAULT_TOL, c: float = 1.0,
                     lambda_max: float = DEFAULT_LAMBDA_MAX) -> float:
    """inf{lambda > 0 : energy(f / lambda) <= c} by bracketed bisection."""

    def at(lam: float) -> float:
        scaled = {v: f[v] / lam for v in g.vertices}
        return _gradient_energy(g, scaled, phi)

    return luxemburg_infimum(at, c, tol, lambda_max).value


@dataclass(frozen=True)
class DynamicCostSchedule:
    """Piecewise-constant edge costs: cost of edge k at time t is the value
    listed for the greatest schedule time <= t, with t clamped into the
    schedule range."""

    times: tuple[float, ...]
    costs: Mapping  # (time, edge index) -> positive cost

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        if not times:
            raise ValueError("schedule needs at least one time")
        if any(a >= b for a, b in zip(times, times[1:])):
            raise ValueError("schedule times must be strictly increasing")
        object.__setattr__(self, "times", times)
        costs = {(float(t), int(k)): float(c)
                 for (t, k), c in dict(self.costs).items()}
        for (t, k), c in costs.items():
            if t not in times:
                raise ValueError(f"cost listed at unscheduled time {t!r}")
            if not c > 0:
                raise ValueError(f"schedule costs must be positive, got {c!r}")
        object.__setattr__(self, "costs", costs)

    def snapshot(self, g: DirectedGraph, t: float) -> tuple[float, tuple[float, ...]]:
        """Effective time and the frozen cost vector at that time."""
        t_eff = min(max(float(t), self.times[0]), self.times[-1])
        for listed in reversed(self.times):
            if listed <= t_eff:
                t_eff = listed
                break
        if t_eff != t:
            log.debug("query time %s clamped to schedule time %s", t, t_eff)
        missing = [k for k in range(len(g.edges))
                   if (t_eff, k) not in self.costs]
        if missing:
            raise ValueError(f"schedule misses edges {missing!r} at "
                             f"time {t_eff}")
        return t_eff, tuple(self.costs[(t_eff, k)]
                            for k in range(len(g.edges)))


def dynamic_distance(g: DirectedGraph, schedule: DynamicCostSchedule,
                     t: float, x, y) -> float:
    """Forward path distance with all edge costs frozen at time t."""
    _, costs = schedule.snapshot(g, t)
    return forward_distance(g, x, y, costs)


def asymmetry_index(g: DirectedGraph, costs=None) -> float:
    """Fraction of ordered pairs x != y with d(x, y) != d(y, x)."""
    d = distance_matrix(g, costs)
    pairs = [(x, y) for x in g.vertices for y in g.vertices if x != y]
    if not pairs:
        return 0.0
    return sum(1 for x, y in pairs if d[(x, y)] != d[(y, x)]) / len(pairs)


def graph_to_json(g: DirectedGraph) -> dict:
    strs = [str(v) for v in g.vertices]
    if len(set(strs)) != len(strs):
        raise ValueError("vertex ids must stringify uniquely")
    return {"vertices": list(g.vertices),
            "edges": [{"from": e.u, "to": e.v, "mu": e.mu, "cost": e.cost}
                      for e in g.edges],
            "measure": {str(v): g.measure[v] for v in g.vertices}}


def graph_from_json(doc: Mapping) -> DirectedGraph:
    vertices = tuple(doc["vertices"])
    by_str = {str(v): v for v in vertices}
    if len(by_str) != len(vertices):
        raise ValueError("vertex ids must stringify uniquely")
    edges = []
    for e in doc["edges"]:
        edges.append(Edge(e["from"], e["to"], float(e.get("mu", 1.0)),
                          parse_ext(e.get("cost", 1.0), "edge cost")))
    measure = None
    if "measure" in doc:
        measure = {}
        for key, m in doc["measure"].items():
            if key not in by_str:
                raise ValueError(f"measure for unknown vertex {key!r}")
            measure[by_str[key]] = float(m)
    return DirectedGraph(vertices, tuple(edges), measure)


def schedule_to_json(s: DynamicCostSchedule) -> dict:
    return {"times": list(s.times),
            "costs": {f"{t}|{k}": format_ext(c)
                      for (t, k), c in sorted(s.costs.items())}}


def schedule_from_json(doc: Mapping) -> DynamicCostSchedule:
    times = tuple(float(t) for t in doc["times"])
    costs = {}
    for key, c in doc["costs"].items():
        st, sep, sk = key.partition("|")
        if not sep:
            raise ValueError(f"bad schedule key {key!r}; expected 'time|edge'")
        costs[(float(st), int(sk))] = parse_ext(c, f"costs[{key}]")
    return DynamicCostSchedule(times, costs)
