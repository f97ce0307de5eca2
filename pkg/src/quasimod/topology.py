"""Balls, entourages, and the three finite topologies of an asymmetric gauge.

Point sets are finite and small; subsets and relations are bitmasks, and
topologies are extensional families of subsets, so every statement here is
decided exactly.  The subset family of an n-point space can reach 2**n
members, which is why generation is guarded at n <= 16.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import AxiomReport, Violation
from .extreal import INF
from .gauges import GaugeSpec, Regime, symmetrize_conorm, symmetrize_max
from .profiles import ScaleGrid

MAX_TOPOLOGY_POINTS = 16

_SIDES = ("forward", "backward", "two_sided")


def _normalize_side(side: str) -> str:
    if side == "sym":
        return "two_sided"
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES} or 'sym', got {side!r}")
    return side


@dataclass(frozen=True)
class Relation:
    """Boolean relation on an ordered point set, one bitmask row per source."""

    points: tuple
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.points):
            raise ValueError("one row per point required")
        full = (1 << len(self.points)) - 1
        if any(row & ~full for row in self.rows):
            raise ValueError("row bits outside the point set")

    @classmethod
    def identity(cls, points) -> "Relation":
        points = tuple(points)
        return cls(points, tuple(1 << i for i in range(len(points))))

    def related(self, x, y) -> bool:
        return bool(self.rows[self.points.index(x)]
                    & (1 << self.points.index(y)))

    def transpose(self) -> "Relation":
        n = len(self.points)
        cols = [0] * n
        for i, row in enumerate(self.rows):
            for j in range(n):
                if row & (1 << j):
                    cols[j] |= 1 << i
        return Relation(self.points, tuple(cols))

    def intersect(self, other: "Relation") -> "Relation":
        _require_same_points(self, other)
        return Relation(self.points, tuple(a & b
                                           for a, b in zip(self.rows, other.rows)))

    def contains(self, other: "Relation") -> bool:
        _require_same_points(self, other)
        return all(b & ~a == 0 for a, b in zip(self.rows, other.rows))

    def has_diagonal(self) -> bool:
        return all(row & (1 << i) for i, row in enumerate(self.rows))

    def pairs(self) -> list[tuple]:
        return [(x, self.points[j]) for x, row in zip(self.points, self.rows)
                for j in range(len(self.points)) if row & (1 << j)]


def _require_same_points(a: Relation, b: Relation) -> None:
    if a.points != b.points:
        raise ValueError("relations live on different point sets")


def compose(a: Relation, b: Relation) -> Relation:
    """(x, z) related iff some y has a(x, y) and b(y, z)."""
    _require_same_points(a, b)
    n = len(a.points)
    out = []
    for row in a.rows:
        acc = 0
        for j in range(n):
            if row & (1 << j):
                acc |= b.rows[j]
        out.append(acc)
    return Relation(a.points, tuple(out))


def _check_radius(g: GaugeSpec, r: float) -> None:
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r!r}")
    if g.regime is Regime.CONORM and not r < 1:
        raise ValueError(f"conorm-regime radius must lie in (0, 1), got {r!r}")


def _forward_rows(g: GaugeSpec, points, r: float, t: float) -> tuple[int, ...]:
    rows = []
    for x in points:
        mask = 0
        for j, y in enumerate(points):
            if g.value(x, y, t) < r:
                mask |= 1 << j
        rows.append(mask)
    return tuple(rows)


def entourage(g: GaugeSpec, r: float, t: float, side: str = "forward",
              points=None) -> Relation:
    """Pairs (x, y) with w(x, y, t) < r; backward swaps the arguments."""
    side = _normalize_side(side)
    _check_radius(g, r)
    points = tuple(points) if points is not None else g.points
    fwd = Relation(points, _forward_rows(g, points, r, t))
    if side == "forward":
        return fwd
    if side == "backward":
        return fwd.transpose()
    return fwd.intersect(fwd.transpose())


def ball(g: GaugeSpec, x, r: float, t: float, side: str = "forward",
         points=None) -> tuple:
    """Strict ball {y : w(x, y, t) < r}, one-sided or two-sided."""
    side = _normalize_side(side)
    _check_radius(g, r)
    points = tuple(points) if points is not None else g.points
    out = []
    for y in points:
        fwd = g.value(x, y, t) < r
        bwd = g.value(y, x, t) < r
        keep = fwd if side == "forward" else bwd if side == "backward" \
            else fwd and bwd
        if keep:
            out.append(y)
    return tuple(out)


@dataclass(frozen=True)
class ThresholdSet:
    """Radii and scales that realize every distinct ball of a tabulated gauge."""

    radii: tuple[float, ...]
    scales: ScaleGrid

    def pairs(self):
        return [(r, t) for r in self.radii for t in self.scales]


def critical_thresholds(g: GaugeSpec, points=None,
                        grid: ScaleGrid | None = None) -> ThresholdSet:
    """Distinct finite gauge values, midpoints between consecutive ones, and
    one radius above the maximum.  Any strict ball at any radius coincides
    with a ball at one of these radii, because the gauge takes finitely many
    values on the sampled points and scales."""
    points = tuple(points) if points is not None else g.points
    grid = grid or g.grid
    if grid is None:
        raise ValueError("critical_thresholds needs a scale grid")
    # conorm radii live in (0, 1): a saturated value of 1 (possible after
    # symmetrization) is outside every admissible ball, so it contributes
    # no radius, and the above-the-top radius below separates it
    cap = 1.0 if g.regime is Regime.CONORM else INF
    values = sorted({v for x in points for y in points for t in grid
                     for v in [g.value(x, y, t)] if 0 < v < cap})
    if not values:
        fallback = 0.5 if g.regime is Regime.CONORM else 1.0
        return ThresholdSet((fallback,), grid)
    radii = set(values)
    radii.update((a + b) / 2.0 for a, b in zip(values, values[1:]))
    top = values[-1]
    radii.add((top + 1.0) / 2.0 if g.regime is Regime.CONORM else top + 1.0)
    return ThresholdSet(tuple(sorted(radii)), grid)


@dataclass(frozen=True)
class FiniteTopology:
    """Extensional topology: the full family of open sets, as bitmasks."""

    points: tuple
    opens: frozenset[int]

    def is_open(self, subset) -> bool:
        return self._mask(subset) in self.opens

    def _mask(self, subset) -> int:
        mask = 0
        for p in subset:
            mask |= 1 << self.points.index(p)
        return mask

    def open_sets(self) -> list[tuple]:
        families = [tuple(self.points[i] for i in range(len(self.points))
                          if mask & (1 << i)) for mask in self.opens]
        return sorted(families, key=lambda s: (len(s),
                                               tuple(self.points.index(p) for p in s)))

    def to_json(self) -> list[list]:
        return [list(s) for s in self.open_sets()]


def generate_topology(base, points) -> FiniteTopology:
    """All unions of the base sets, together with the empty set and the
    whole space."""
    points = tuple(points)
    if len(points) > MAX_TOPOLOGY_POINTS:
        raise ValueError(
            f"topology generation is exponential in the point count; "
            f"{len(points)} points exceeds the {MAX_TOPOLOGY_POINTS}-point cap")
    full = (1 << len(points)) - 1
    index = {p: i for i, p in enumerate(points)}
    opens = {0, full}
    for subset in base:
        mask = 0
        for p in subset:
            if p not in index:
                raise ValueError(f"base point {p!r} outside the point set")
            mask |= 1 << index[p]
        opens |= {o | mask for o in opens}
    return FiniteTopology(points, frozenset(opens))


def join_topologies(t1: FiniteTopology, t2: FiniteTopology) -> FiniteTopology:
    """Least topology refining both: generated by pairwise intersections."""
    if t1.points != t2.points:
        raise ValueError("topologies live on different point sets")
    points = t1.points
    base = [[points[i] for i in range(len(points)) if (u & v) & (1 << i)]
            for u in t1.opens for v in t2.opens]
    return generate_topology(base, points)


def _ball_base(g: GaugeSpec, points, thresholds: ThresholdSet, side: str):
    return [ball(g, x, r, t, side, points)
            for x in points for r, t in thresholds.pairs()]


@dataclass(frozen=True)
class JoinReport:
    tau_plus: FiniteTopology
    tau_minus: FiniteTopology
    join: FiniteTopology
    tau_sym: FiniteTopology
    equal: bool

    def to_json(self) -> dict:
        return {"tau_plus": self.tau_plus.to_json(),
                "tau_minus": self.tau_minus.to_json(),
                "join": self.join.to_json(),
                "tau_sym": self.tau_sym.to_json(),
                "join_equals_sym": self.equal}


def verify_join_equality(g: GaugeSpec, points=None,
                         grid: ScaleGrid | None = None) -> JoinReport:
    """Forward and backward ball topologies, their join, and the topology of
    the symmetrized gauge, compared as families of sets."""
    points = tuple(points) if points is not None else g.points
    grid = grid or g.grid
    if grid is None:
        raise ValueError("verify_join_equality needs a scale grid")
    thresholds = critical_thresholds(g, points, grid)
    tau_plus = generate_topology(_ball_base(g, points, thresholds, "forward"),
                                 points)
    tau_minus = generate_topology(_ball_base(g, points, thresholds, "backward"),
                                  points)
    joined = join_topologies(tau_plus, tau_minus)
    sym = symmetrize_conorm(g) if g.regime is Regime.CONORM else symmetrize_max(g)
    sym_thresholds = critical_thresholds(sym, points, grid)
    tau_sym = generate_topology(
        _ball_base(sym, points, sym_thresholds, "two_sided"), points)
    return JoinReport(tau_plus, tau_minus, joined, tau_sym,
                      joined.opens == tau_sym.opens)


def small_composite_check(g: GaugeSpec, points=None,
                          grid: ScaleGrid | None = None) -> AxiomReport:
    """For each threshold (r, t), shrink the radius to r' with r' (+) r' < r
    and verify E(r', t) o E(r', t) <= E(r, t) on both sides."""
    if g.regime is not Regime.CONORM:
        raise ValueError("small_composite_check applies to conorm-regime gauges")
    points = tuple(points) if points is not None else g.points
    grid = grid or g.grid
    if grid is None:
        raise ValueError("small_composite_check needs a scale grid")
    thresholds = critical_thresholds(g, points, grid)
    violations: list[Violation] = []
    for r, t in thresholds.pairs():
        rp = g.conorm.half_radius(r)
        if not g.conorm.apply(rp, rp) < r:
            raise ValueError(f"shrunk radius {rp} fails {rp} (+) {rp} < {r}")
        fwd = entourage(g, rp, t, "forward", points)
        big = entourage(g, r, t, "forward", points)
        for small, target, side in ((fwd, big, "forward"),
                                    (fwd.transpose(), big.transpose(), "backward")):
            comp = compose(small, small)
            if target.contains(comp):
                continue
            for x, z in comp.pairs():
                if not target.related(x, z):
                    lhs = g.value(x, z, t) if side == "forward" \
                        else g.value(z, x, t)
                    violations.append(Violation(
                        "small-composite", (side, x, z, r, rp, t), lhs, r))
    return AxiomReport(("small-composite",), tuple(violations),
                       (f"{len(thresholds.radii) * len(grid)} thresholds checked",))


def quasi_uniformity_report(g: GaugeSpec, points=None,
                            grid: ScaleGrid | None = None) -> AxiomReport:
    """Diagonal containment, refinement under shrinking thresholds, and the
    small-composite law, over the critical thresholds.

    Upward closure holds by representation (an entourage is the full pair set
    it denotes), so it contributes a note, not a check.
    """
    if g.regime is not Regime.CONORM:
        raise ValueError("quasi_uniformity_report applies to conorm-regime gauges")
    points = tuple(points) if points is not None else g.points
    grid = grid or g.grid
    if grid is None:
        raise ValueError("quasi_uniformity_report needs a scale grid")
    thresholds = critical_thresholds(g, points, grid)
    violations: list[Violation] = []
    for r, t in thresholds.pairs():
        rel = entourage(g, r, t, "forward", points)
        if not rel.has_diagonal():
            for i, x in enumerate(points):
                if not rel.rows[i] & (1 << i):
                    violations.append(Violation("diagonal", (x, r, t),
                                                g.value(x, x, t), r))
    # refinement in the radius is immediate from r <= r'; only the scale
    # direction can fail, and only through a monotonicity defect
    scales = list(grid)
    for r in thresholds.radii:
        for t_small, t_big in zip(scales, scales[1:]):
            small = entourage(g, r, t_small, "forward", points)
            big = entourage(g, r, t_big, "forward", points)
            if big.contains(small):
                continue
            for x, y in small.pairs():
                if not big.related(x, y):
                    violations.append(Violation(
                        "refinement", (x, y, r, t_small, t_big),
                        g.value(x, y, t_big), r))
    composite = small_composite_check(g, points, grid)
    violations.extend(composite.violations)
    return AxiomReport(("diagonal", "refinement", "small-composite"),
                       tuple(violations),
                       ("upward closure holds by representation",))
