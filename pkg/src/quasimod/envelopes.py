"""One-sided Lipschitz extension of partial functions over quasi-metrics.

The two envelope formulas only differ in which argument slot of the
asymmetric distance they use, and that order is load-bearing: it is what
makes the extensions one-sided Lipschitz in the same direction as the input
data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .extreal import INF, ext_mul


@dataclass(frozen=True)
class PartialFunction:
    domain: tuple
    values: Mapping
    lipschitz_L: float

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        if not self.domain:
            raise ValueError("domain must be nonempty")
        if not self.lipschitz_L >= 0:
            raise ValueError(f"Lipschitz constant must be nonnegative, "
                             f"got {self.lipschitz_L!r}")
        missing = [a for a in self.domain if a not in self.values]
        if missing:
            raise ValueError(f"no values for domain points {missing!r}")


def _dist(d: Mapping, x, y) -> float:
    if x == y:
        return d.get((x, y), 0.0)
    v = d.get((x, y))
    return INF if v is None else v


def upper_envelope(f: PartialFunction, d: Mapping, points) -> dict:
    """phi_bar(x) = min over a in A of phi(a) + L * d(x, a)."""
    return {x: min(f.values[a] + ext_mul(f.lipschitz_L, _dist(d, x, a))
                   for a in f.domain)
            for x in points}


def lower_envelope(f: PartialFunction, d: Mapping, points) -> dict:
    """phi_under(x) = max over a in A of phi(a) - L * d(a, x)."""
    return {x: max(f.values[a] - ext_mul(f.lipschitz_L, _dist(d, a, x))
                   for a in f.domain)
            for x in points}
