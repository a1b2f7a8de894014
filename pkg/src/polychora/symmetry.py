"""Rotation-group accounting from enumerated incidence data.

The full symmetry group of a regular 4-polytope acts simply transitively on
flags (vertex < edge < face < cell chains), the rotation subgroup on half of
them, so the rotation order is flags/2.  Orbit sizes are the element counts;
stabilizer orders follow from orbit-stabilizer; the alpha values are the
incident-cell counts per element class.  The pole-number identity

    2 (n - cells) = sum_i  v_i * n_i * (1 - alpha_i / n_i)

is evaluated in exact rational arithmetic on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .incidence import IncidenceComplex, StructureError, incidence_profile


@dataclass(frozen=True)
class SymmetryProfile:
    n: int                              # rotation group order
    cell_count: int
    v: tuple[int, int, int]             # orbit sizes: vertices, edges, faces
    n_stab: tuple[int, int, int]        # stabilizer orders per orbit
    alpha: tuple[int, int, int]         # incident-cell counts per orbit


@dataclass(frozen=True)
class PoleIdentity:
    left: int
    right: int
    holds: bool


def flag_count(cx: IncidenceComplex) -> int:
    """Number of vertex < edge < face < cell chains.

    Each face of p vertices contributes p edges times two vertices times its
    incident cells.
    """
    return sum(2 * len(face) * len(cx.face_to_cells[fi])
               for fi, face in enumerate(cx.faces))


def symmetry_profile(cx: IncidenceComplex) -> SymmetryProfile:
    flags = flag_count(cx)
    if flags % 2:
        raise StructureError("flag count must be even")
    n = flags // 2
    n0, n1, n2, n3 = cx.counts
    v = (n0, n1, n2)
    for size in v:
        if n % size:
            raise StructureError(
                f"group order {n} is not divisible by orbit size {size}")
    profile = incidence_profile(cx)
    return SymmetryProfile(
        n=n,
        cell_count=n3,
        v=v,
        n_stab=tuple(n // size for size in v),
        alpha=(profile.cells_per_vertex, profile.cells_per_edge,
               profile.cells_per_face),
    )


def pole_identity(profile: SymmetryProfile) -> PoleIdentity:
    """Both sides of the pole-number identity, exactly."""
    left = Fraction(2 * (profile.n - profile.cell_count))
    right = Fraction(0)
    for size, stab, alpha in zip(profile.v, profile.n_stab, profile.alpha):
        right += size * stab * (1 - Fraction(alpha, stab))
    if right.denominator != 1:
        raise StructureError("right-hand side is not an integer")
    return PoleIdentity(left=int(left), right=int(right),
                        holds=(left == right))
