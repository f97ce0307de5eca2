"""Scale grids and piecewise-constant scale profiles.

A ScaleGrid is a strictly increasing list of positive scales t_1 < ... < t_m.
A Profile assigns one value per grid scale and is read right-continuously:
the value at an arbitrary t is the entry at the smallest grid scale >= t,
and the last entry once t runs past the grid.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .conorms import TConorm
from .extreal import ensure_ext


@dataclass(frozen=True)
class ScaleGrid:
    scales: tuple[float, ...]

    def __post_init__(self):
        scales = tuple(float(t) for t in self.scales)
        if not scales:
            raise ValueError("scale grid must be nonempty")
        for t in scales:
            if not (t > 0.0 and t != float("inf")):
                raise ValueError(f"scales must be positive finite reals, got {t!r}")
        if any(a >= b for a, b in zip(scales, scales[1:])):
            raise ValueError("scales must be strictly increasing")
        object.__setattr__(self, "scales", scales)

    def __len__(self) -> int:
        return len(self.scales)

    def __iter__(self):
        return iter(self.scales)

    def __getitem__(self, i: int) -> float:
        return self.scales[i]

    def ceil_index(self, t: float) -> int | None:
        """Index of the smallest grid scale >= t, or None past the grid."""
        if t <= 0:
            raise ValueError(f"scale must be positive, got {t!r}")
        i = bisect.bisect_left(self.scales, t)
        return i if i < len(self.scales) else None

    def project_sum(self, t: float, s: float) -> float | None:
        """Smallest grid scale >= t + s, or None if the sum leaves the grid."""
        i = self.ceil_index(t + s)
        return None if i is None else self.scales[i]


@dataclass(frozen=True)
class Profile:
    grid: ScaleGrid
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(ensure_ext(v, "profile value") for v in self.values)
        if len(values) != len(self.grid):
            raise ValueError("profile needs exactly one value per grid scale")
        object.__setattr__(self, "values", values)

    def value_at(self, t: float) -> float:
        i = self.grid.ceil_index(t)
        return self.values[-1] if i is None else self.values[i]

    def nonincreasing_violations(self) -> list[tuple[float, float, float, float]]:
        """Adjacent grid scales (t, t') with value(t) < value(t')."""
        out = []
        for i in range(len(self.values) - 1):
            if self.values[i] < self.values[i + 1]:
                out.append((self.grid[i], self.grid[i + 1],
                            self.values[i], self.values[i + 1]))
        return out

    def is_nonincreasing(self) -> bool:
        return not self.nonincreasing_violations()


def right_regularize(p: Profile) -> Profile:
    """Running minimum of the values: the largest nonincreasing minorant,
    which agrees with p wherever p already is nonincreasing."""
    out = list(p.values)
    for i in range(1, len(out)):
        out[i] = min(out[i], out[i - 1])
    return Profile(p.grid, tuple(out))


def profile_convolve(phi: Profile, psi: Profile, conorm: TConorm) -> Profile:
    """Scale convolution of two [0,1]-valued profiles on a shared grid.

    The entry at grid scale u is the minimum of conorm(phi(t_i), psi(t_j))
    over grid pairs with t_i + t_j <= u.  The pair (t_1, t_1) is always
    admitted so that scales below every representable split still get the
    finest available one; the candidate set only grows with u, so the
    output is nonincreasing.
    """
    if phi.grid != psi.grid:
        raise ValueError("profiles must share a grid")
    scales = phi.grid.scales
    for v in phi.values + psi.values:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"convolution needs values in [0, 1], got {v!r}")
    out = []
    for u in scales:
        best = conorm.apply(phi.values[0], psi.values[0])
        for i, ti in enumerate(scales):
            if ti + scales[0] > u:
                break
            for j, tj in enumerate(scales):
                if ti + tj > u:
                    break
                best = min(best, conorm.apply(phi.values[i], psi.values[j]))
        out.append(best)
    return Profile(phi.grid, tuple(out))
