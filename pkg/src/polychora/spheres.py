"""Locating an unknown vertex from four known vertices and their distances.

Three centers carry the edge distance and one carries the larger second
distance.  Subtracting the first sphere equation from the others leaves a
linear 3x4 system whose solution set is a line; substituting the line into
the first equation gives a quadratic, so there are at most two candidates.
This is a float-domain procedure (the published tables carry 10 digits);
pivoting always takes the largest-magnitude entry for stability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

_RANK_TOL = 1e-9       # relative pivot threshold for the rank-3 requirement
_TANGENT_TOL = 1e-12   # discriminant below this (relative) counts as tangency


class DegenerateCentersError(ValueError):
    """The four centers are not affinely independent (rank below 3)."""


@dataclass(frozen=True)
class SphereSystem:
    centers: tuple[tuple[float, float, float, float], ...]
    a: float
    b: float

    def __post_init__(self) -> None:
        if len(self.centers) != 4:
            raise ValueError("exactly four centers are required")
        if not self.a > 0:
            raise ValueError("the edge distance a must be positive")
        if not self.b > self.a:
            raise ValueError("the second distance b must exceed a")

    @property
    def radii(self) -> tuple[float, float, float, float]:
        return (self.a, self.a, self.a, self.b)


def solve_vertex(system: SphereSystem) -> list[tuple[float, float, float, float]]:
    """Intersect the four spheres: zero, one or two points.

    Zero points means the spheres miss (negative discriminant), which is a
    valid outcome; degenerate center configurations raise instead.
    """
    centers = np.asarray(system.centers, dtype=float)
    radii = np.asarray(system.radii, dtype=float)
    mat = 2.0 * (centers[1:] - centers[0])
    rhs = ((centers[1:] ** 2).sum(axis=1) - (centers[0] ** 2).sum()
           - (radii[1:] ** 2 - radii[0] ** 2))
    scale = np.abs(mat).max()
    if scale == 0.0:
        raise DegenerateCentersError("all centers coincide")

    # Forward elimination with full pivoting over the 3x4 system.
    m = np.hstack([mat, rhs[:, None]])
    col_order: list[int] = []
    for step in range(3):
        sub = np.abs(m[step:, :4])
        for c in col_order:
            sub[:, c] = 0.0
        r_off, c = np.unravel_index(np.argmax(sub), sub.shape)
        if sub[r_off, c] < _RANK_TOL * scale:
            raise DegenerateCentersError(
                "centers are affinely dependent (rank below 3)")
        r = step + r_off
        m[[step, r]] = m[[r, step]]
        col_order.append(int(c))
        for i in range(3):
            if i != step:
                m[i] -= m[step] * (m[i, c] / m[step, c])

    free_col = next(c for c in range(4) if c not in col_order)
    base = np.zeros(4)
    direction = np.zeros(4)
    direction[free_col] = 1.0
    for step, c in enumerate(col_order):
        base[c] = m[step, 4] / m[step, c]
        direction[c] = -m[step, free_col] / m[step, c]

    # |base + t*direction - c0|^2 = a^2 as a quadratic in t.
    offset = base - centers[0]
    qa = float(direction @ direction)
    qb = 2.0 * float(direction @ offset)
    qc = float(offset @ offset) - system.a ** 2
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        return []
    disc_scale = max(qb * qb, abs(4.0 * qa * qc), 1.0)
    if disc <= _TANGENT_TOL * disc_scale:
        roots = [-qb / (2.0 * qa)]
    else:
        sq = np.sqrt(disc)
        roots = [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)]
    return [tuple((base + t * direction).tolist()) for t in roots]


def residuals(system: SphereSystem,
              point: Sequence[float]) -> tuple[float, float, float, float]:
    """Relative distance-equation residuals of a candidate point."""
    p = np.asarray(point, dtype=float)
    out = []
    for center, r in zip(system.centers, system.radii):
        d = float(np.linalg.norm(p - np.asarray(center)))
        out.append((d - r) / r)
    return tuple(out)
