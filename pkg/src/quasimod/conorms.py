"""Triangular conorms on [0, 1].

A t-conorm combines two "degrees of farness" into one.  The three supported
here are the classical trio: maximum, probabilistic sum a + b - a*b, and the
bounded (Lukasiewicz) sum min(1, a + b).  All are associative, commutative,
monotone, and have 0 as unit.
"""

from __future__ import annotations

import enum


class TConorm(enum.Enum):
    MAX = "max"
    PROBABILISTIC_SUM = "probabilistic_sum"
    BOUNDED_SUM = "bounded_sum"

    def apply(self, a: float, b: float) -> float:
        if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise ValueError(f"conorm arguments must lie in [0, 1], got {a!r}, {b!r}")
        if self is TConorm.MAX:
            return max(a, b)
        if self is TConorm.PROBABILISTIC_SUM:
            # rounding can drop a + b - a*b an ulp outside [max(a, b), 1];
            # the clamps restore both lattice bounds and are no-ops on
            # dyadic inputs, where the arithmetic is exact
            return max(a, b, min(1.0, a + b - a * b))
        return min(1.0, a + b)

    def combine(self, values) -> float:
        """Fold apply over an iterable; empty input gives the unit 0."""
        acc = 0.0
        for v in values:
            acc = self.apply(acc, v)
        return acc

    @property
    def wire_name(self) -> str:
        """Short spelling used in JSON documents and on the command line."""
        return _WIRE_NAMES[self]

    def half_radius(self, r: float) -> float:
        """A value h with h (+) h <= r, used to split a ball radius in two.

        For max any h <= r works, and r/2 also suits the probabilistic sum
        since h + h - h*h <= 2h.  The bounded sum needs slack against the
        clamp, and r/4 + r/4 = r/2 <= r stays strictly inside for r < 1.
        """
        if not 0.0 < r <= 1.0:
            raise ValueError(f"radius must lie in (0, 1], got {r!r}")
        if self is TConorm.BOUNDED_SUM:
            return r / 4.0
        return r / 2.0


_WIRE_NAMES = {
    TConorm.MAX: "max",
    TConorm.PROBABILISTIC_SUM: "prob_sum",
    TConorm.BOUNDED_SUM: "bounded_sum",
}

_BY_NAME = {c.value: c for c in TConorm} | {v: k for k, v in _WIRE_NAMES.items()}


def conorm_from_name(name: str) -> TConorm:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown conorm {name!r}; expected one of "
                         f"{sorted(_BY_NAME)}") from None
