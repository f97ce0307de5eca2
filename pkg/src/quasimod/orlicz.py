"""Discrete weighted Musielak-Orlicz modulars, norms, and one-sided variants.

Measure spaces are finite weighted point sets, so modulars are finite sums
and every norm is a bracketed bisection on a nonincreasing scale map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .gauges import GaugeSpec, Regime
from .luxemburg import DEFAULT_LAMBDA_MAX, DEFAULT_TOL, luxemburg_infimum
from .profiles import ScaleGrid


@dataclass(frozen=True)
class DiscreteMeasureSpace:
    points: tuple
    mu: Mapping

    def __post_init__(self):
        points = tuple(self.points)
        if not points:
            raise ValueError("measure space needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", points)
        mu = {p: float(dict(self.mu)[p]) for p in points} if self.mu else None
        if mu is None:
            raise ValueError("measure space needs masses")
        for p, m in mu.items():
            if not (m > 0 and math.isfinite(m)):
                raise ValueError(f"mass at {p!r} must be positive and finite, "
                                 f"got {m!r}")
        object.__setattr__(self, "mu", mu)

    def to_json(self) -> dict:
        return {"points": list(self.points),
                "mu": {str(p): self.mu[p] for p in self.points}}

    @classmethod
    def from_json(cls, doc: Mapping) -> "DiscreteMeasureSpace":
        points = tuple(doc["points"])
        by_str = {str(p): p for p in points}
        if len(by_str) != len(points):
            raise ValueError("point ids must stringify uniquely")
        return cls(points, {by_str[k]: float(m)
                            for k, m in doc["mu"].items()})


@dataclass(frozen=True)
class MusielakOrlicz:
    """Point-indexed growth functions phi_p(t), convex and nondecreasing
    with phi_p(0) = 0, in one of three fixed shapes."""

    kind: str
    exponents: Mapping | None = None      # variable_exponent: point -> p_i
    p: float | None = None                # double_phase
    q: float | None = None
    a: Mapping | None = None              # double_phase: point -> a_i >= 0
    weights: Mapping | None = None        # weighted: point -> w_i > 0
    base: "MusielakOrlicz | None" = None  # weighted

    def __post_init__(self):
        if self.kind == "variable_exponent":
            exponents = dict(self.exponents or {})
            if not exponents:
                raise ValueError("variable exponent needs per-point exponents")
            for pt, p in exponents.items():
                if not (1.0 <= float(p) < math.inf):
                    raise ValueError(f"exponent at {pt!r} must lie in "
                                     f"[1, inf), got {p!r}")
            object.__setattr__(self, "exponents",
                               {pt: float(p) for pt, p in exponents.items()})
        elif self.kind == "double_phase":
            if self.p is None or self.q is None or not 1.0 <= self.p < self.q:
                raise ValueError(f"double phase needs 1 <= p < q, got "
                                 f"p={self.p!r}, q={self.q!r}")
            a = dict(self.a or {})
            if any(not float(c) >= 0 for c in a.values()):
                raise ValueError("double-phase coefficients must be >= 0")
            object.__setattr__(self, "a", {pt: float(c) for pt, c in a.items()})
        elif self.kind == "weighted":
            if self.base is None:
                raise ValueError("weighted family needs a base family")
            weights = dict(self.weights or {})
            if any(not float(w) > 0 for w in weights.values()):
                raise ValueError("weights must be positive")
            object.__setattr__(self, "weights",
                               {pt: float(w) for pt, w in weights.items()})
        else:
            raise ValueError(f"unknown Musielak-Orlicz kind {self.kind!r}")

    @classmethod
    def variable_exponent(cls, exponents: Mapping) -> "MusielakOrlicz":
        return cls("variable_exponent", exponents=exponents)

    @classmethod
    def double_phase(cls, p: float, q: float, a: Mapping) -> "MusielakOrlicz":
        return cls("double_phase", p=p, q=q, a=a)

    @classmethod
    def weighted(cls, base: "MusielakOrlicz", weights: Mapping) -> "MusielakOrlicz":
        return cls("weighted", weights=weights, base=base)

    def value(self, point, t: float) -> float:
        if not t >= 0:
            raise ValueError(f"argument must be nonnegative, got {t!r}")
        if self.kind == "variable_exponent":
            if point not in self.exponents:
                raise ValueError(f"no exponent for point {point!r}")
            return t ** self.exponents[point]
        if self.kind == "double_phase":
            if point not in self.a:
                raise ValueError(f"no coefficient for point {point!r}")
            return t ** self.p + self.a[point] * t ** self.q
        if point not in self.weights:
            raise ValueError(f"no weight for point {point!r}")
        return self.weights[point] * self.base.value(point, t)

    def to_json(self) -> dict:
        if self.kind == "variable_exponent":
            return {"kind": self.kind,
                    "p": {str(pt): p for pt, p in self.exponents.items()}}
        if self.kind == "double_phase":
            return {"kind": self.kind, "p": self.p, "q": self.q,
                    "a": {str(pt): c for pt, c in self.a.items()}}
        return {"kind": self.kind,
                "w": {str(pt): w for pt, w in self.weights.items()},
                "base": self.base.to_json()}


def orlicz_from_json(doc: Mapping, space: DiscreteMeasureSpace) -> MusielakOrlicz:
    by_str = {str(p): p for p in space.points}

    def keyed(field):
        out = {}
        for k, v in doc[field].items():
            if k not in by_str:
                raise ValueError(f"{field}[{k!r}] names an unknown point")
            out[by_str[k]] = float(v)
        return out

    kind = doc.get("kind")
    if kind == "variable_exponent":
        return MusielakOrlicz.variable_exponent(keyed("p"))
    if kind == "double_phase":
        return MusielakOrlicz.double_phase(float(doc["p"]), float(doc["q"]),
                                           keyed("a"))
    if kind == "weighted":
        return MusielakOrlicz.weighted(orlicz_from_json(doc["base"], space),
                                       keyed("w"))
    raise ValueError(f"unknown Musielak-Orlicz kind {kind!r}")


def parse_function(doc: Mapping, space: DiscreteMeasureSpace) -> dict:
    """Real function from JSON {point id: value}; every point must appear."""
    by_str = {str(p): p for p in space.points}
    f = {}
    for k, v in doc.items():
        if k not in by_str:
            raise ValueError(f"function value for unknown point {k!r}")
        v = float(v)
        if not math.isfinite(v):
            raise ValueError(f"function value at {k!r} must be finite")
        f[by_str[k]] = v
    missing = [p for p in space.points if p not in f]
    if missing:
        raise ValueError(f"function misses points {missing!r}")
    return f


def _require_total(space: DiscreteMeasureSpace, f: Mapping) -> None:
    missing = [p for p in space.points if p not in f]
    if missing:
        raise ValueError(f"function misses points {missing!r}")


def modular(space: DiscreteMeasureSpace, phi: MusielakOrlicz,
            f: Mapping) -> float:
    """Sum over points of phi_p(|f(p)|) * mu(p)."""
    _require_total(space, f)
    return sum(phi.value(p, abs(f[p])) * space.mu[p] for p in space.points)


def luxemburg_norm(space: DiscreteMeasureSpace, phi: MusielakOrlicz,
                   f: Mapping, tol: float = DEFAULT_TOL,
                   lambda_max: float = DEFAULT_LAMBDA_MAX) -> float:
    """inf{lambda > 0 : modular(f / lambda) <= 1}."""
    _require_total(space, f)
    return luxemburg_infimum(
        lambda lam: modular(space, phi, {p: f[p] / lam for p in space.points}),
        1.0, tol, lambda_max).value


@dataclass(frozen=True)
class UnitBallReport:
    norm: float
    modular_value: float
    equivalence_ok: bool
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.equivalence_ok and self.lower_ok and self.upper_ok

    def to_json(self) -> dict:
        return {"norm": self.norm, "modular": self.modular_value,
                "equivalence_ok": self.equivalence_ok,
                "lower_ok": self.lower_ok, "upper_ok": self.upper_ok,
                "ok": self.ok}


def unit_ball_check(space: DiscreteMeasureSpace, phi: MusielakOrlicz,
                    f: Mapping, tol: float = 1e-9) -> UnitBallReport:
    """Three clauses linking the norm and the modular at threshold 1, each
    within a tol band: norm <= 1 iff modular <= 1; norm >= 1 implies
    modular >= norm; norm <= 1 implies modular <= norm."""
    norm = luxemburg_norm(space, phi, f, tol)
    rho = modular(space, phi, f)
    near_one = abs(norm - 1.0) <= tol or abs(rho - 1.0) <= tol
    equivalence_ok = (norm <= 1.0) == (rho <= 1.0) or near_one
    lower_ok = norm < 1.0 or rho >= norm - tol
    upper_ok = norm > 1.0 or rho <= norm + tol
    return UnitBallReport(norm, rho, equivalence_ok, lower_ok, upper_ok)


@dataclass(frozen=True)
class OneSidedPair:
    psi1: MusielakOrlicz
    psi2: MusielakOrlicz


def one_sided_modulars(space: DiscreteMeasureSpace, pair: OneSidedPair,
                       f: Mapping) -> tuple[float, float]:
    """rho_plus feeds positive parts to psi1; rho_minus feeds negative parts
    to psi2."""
    _require_total(space, f)
    rho_plus = sum(pair.psi1.value(p, max(f[p], 0.0)) * space.mu[p]
                   for p in space.points)
    rho_minus = sum(pair.psi2.value(p, max(-f[p], 0.0)) * space.mu[p]
                    for p in space.points)
    return rho_plus, rho_minus


def one_sided_gauges(space: DiscreteMeasureSpace, pair: OneSidedPair,
                     f: Mapping, tol: float = DEFAULT_TOL
                     ) -> tuple[float, float, float]:
    """(norm_plus, norm_minus, norm_sym) with norm_sym the max of the two."""
    _require_total(space, f)

    def plus_at(lam):
        return one_sided_modulars(space, pair,
                                  {p: f[p] / lam for p in space.points})[0]

    def minus_at(lam):
        return one_sided_modulars(space, pair,
                                  {p: f[p] / lam for p in space.points})[1]

    norm_plus = luxemburg_infimum(plus_at, 1.0, tol).value
    norm_minus = luxemburg_infimum(minus_at, 1.0, tol).value
    return norm_plus, norm_minus, max(norm_plus, norm_minus)


def quasi_metric_from_gauges(space: DiscreteMeasureSpace, pair: OneSidedPair,
                             f: Mapping, g: Mapping, tol: float = DEFAULT_TOL
                             ) -> tuple[float, float]:
    """d_plus(f, g) = norm_plus of f - g, and d_minus likewise."""
    _require_total(space, f)
    _require_total(space, g)
    diff = {p: f[p] - g[p] for p in space.points}
    norm_plus, norm_minus, _ = one_sided_gauges(space, pair, diff, tol)
    return norm_plus, norm_minus


def one_sided_modular_gauge(space: DiscreteMeasureSpace, psi1: MusielakOrlicz,
                            functions: Mapping, grid: ScaleGrid | None = None,
                            name: str = "one_sided_modular") -> GaugeSpec:
    """Additive gauge w(F, G, t) = rho_plus((F - G) / t) over named functions.

    For convex nondecreasing psi1 this satisfies the split-scale triangle
    inequality: positive parts are subadditive and psi1 turns the two-scale
    convex combination into a sum bound.
    """
    functions = {fid: dict(f) for fid, f in functions.items()}
    for fid, f in functions.items():
        _require_total(space, f)
    ids = tuple(functions)

    def fn(a, b, t):
        diff = {p: (functions[a][p] - functions[b][p]) / t
                for p in space.points}
        return sum(psi1.value(p, max(diff[p], 0.0)) * space.mu[p]
                   for p in space.points)

    return GaugeSpec(regime=Regime.ADDITIVE, points=ids, grid=grid,
                     name=name, fn=fn)
