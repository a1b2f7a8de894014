"""Exact canonical vertex sets for the tesseract, 600-cell and 120-cell.

The 4-cube comes in two frames: the 0/1 corner frame whose row order the
plane-projection table reproduces, and a centered frame.  The two big polytopes use the standard
coordinate realizations over Q(sqrt5); their vertices are sorted by exact
lexicographic comparison so indices are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .golden import (GoldenNumber, ONE, PHI, SQRT5, TWO, Vec4, ZERO, golden_sqrt)

_EVEN_PERMS = tuple(p for p in itertools.permutations(range(4))
                    if sum(1 for i in range(4) for j in range(i + 1, 4)
                           if p[i] > p[j]) % 2 == 0)


@dataclass(frozen=True)
class SchlafliDescriptor:
    """{p, q, r}: p-gonal faces, q per cell vertex, r cells per edge."""
    p: int
    q: int
    r: int
    name: str


TESSERACT = SchlafliDescriptor(4, 3, 3, "tesseract")
CELL_120 = SchlafliDescriptor(5, 3, 3, "120-cell")
CELL_600 = SchlafliDescriptor(3, 3, 5, "600-cell")

CORNER_FRAME = "corner-frame"
CANONICAL_FRAME = "canonical-frame"


@dataclass(frozen=True)
class Polytope:
    descriptor: SchlafliDescriptor
    vertices: tuple[Vec4, ...]
    frame_note: str
    scale: GoldenNumber

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def centroid(self) -> Vec4:
        acc = Vec4(ZERO, ZERO, ZERO, ZERO)
        for v in self.vertices:
            acc = acc + v
        inv = GoldenNumber(Fraction(1, len(self.vertices)))
        return acc * inv


def _signed(values: tuple[GoldenNumber, ...]) -> list[tuple[GoldenNumber, ...]]:
    """All sign choices over the nonzero entries of one arrangement."""
    nz = [i for i, v in enumerate(values) if not v.is_zero]
    out = []
    for signs in itertools.product((1, -1), repeat=len(nz)):
        row = list(values)
        for s, i in zip(signs, nz):
            if s < 0:
                row[i] = -row[i]
        out.append(tuple(row))
    return out


def _all_perms(base: tuple[GoldenNumber, ...]) -> set[tuple[GoldenNumber, ...]]:
    out: set[tuple[GoldenNumber, ...]] = set()
    for perm in itertools.permutations(base):
        out.update(_signed(perm))
    return out


def _even_perms(base: tuple[GoldenNumber, ...]) -> set[tuple[GoldenNumber, ...]]:
    out: set[tuple[GoldenNumber, ...]] = set()
    for p in _EVEN_PERMS:
        arranged = tuple(base[p[i]] for i in range(4))
        out.update(_signed(arranged))
    return out


def _sorted_polytope(descriptor: SchlafliDescriptor,
                     coords: set[tuple[GoldenNumber, ...]]) -> Polytope:
    # Lexicographic by exact value comparison, so indices are reproducible.
    vertices = tuple(sorted((Vec4(*c) for c in coords),
                            key=Vec4.components))
    return Polytope(descriptor, vertices, CANONICAL_FRAME, ONE)


# Row order of the source's 4-cube vertex list.
_TESSERACT_ROWS = (
    (0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
    (0, 0, 0, 1), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
    (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1), (1, 1, 1, 0),
    (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 1),
)


def build_tesseract(centered: bool = False) -> Polytope:
    """Unit 4-cube; 0/1 corner frame in the published row order, or centered."""
    half = Fraction(1, 2)
    if centered:
        vertices = tuple(Vec4(*(Fraction(c) - half for c in row))
                         for row in _TESSERACT_ROWS)
        return Polytope(TESSERACT, vertices, CANONICAL_FRAME, ONE)
    vertices = tuple(Vec4(*row) for row in _TESSERACT_ROWS)
    return Polytope(TESSERACT, vertices, CORNER_FRAME, ONE)


@lru_cache(maxsize=None)
def build_600cell() -> Polytope:
    """120 vertices at exact circumradius 1 (squared norm 1)."""
    half = GoldenNumber(Fraction(1, 2))
    coords: set[tuple[GoldenNumber, ...]] = set()
    coords.update(_signed((half, half, half, half)))
    coords.update(_all_perms((ONE, ZERO, ZERO, ZERO)))
    # (phi/2, 1/2, 1/(2 phi), 0): phi/2 = (1+sqrt5)/4, 1/(2 phi) = (sqrt5-1)/4
    base = (GoldenNumber(Fraction(1, 4), Fraction(1, 4)),
            half,
            GoldenNumber(Fraction(-1, 4), Fraction(1, 4)),
            ZERO)
    coords.update(_even_perms(base))
    poly = _sorted_polytope(CELL_600, coords)
    assert poly.vertex_count == 120
    return poly


@lru_cache(maxsize=None)
def build_120cell() -> Polytope:
    """600 vertices at exact squared circumradius 8."""
    phi = PHI
    phi_inv = GoldenNumber(Fraction(-1, 2), Fraction(1, 2))
    phi_sq = GoldenNumber(Fraction(3, 2), Fraction(1, 2))
    phi_inv_sq = GoldenNumber(Fraction(3, 2), Fraction(-1, 2))
    coords: set[tuple[GoldenNumber, ...]] = set()
    coords.update(_all_perms((ZERO, ZERO, TWO, TWO)))
    coords.update(_all_perms((ONE, ONE, ONE, SQRT5)))
    coords.update(_all_perms((phi_inv_sq, phi, phi, phi)))
    coords.update(_all_perms((phi_inv, phi_inv, phi_inv, phi_sq)))
    coords.update(_even_perms((ZERO, phi_inv_sq, ONE, phi_sq)))
    coords.update(_even_perms((ZERO, phi_inv, phi, SQRT5)))
    coords.update(_even_perms((phi_inv, ONE, phi, TWO)))
    poly = _sorted_polytope(CELL_120, coords)
    assert poly.vertex_count == 600
    return poly


def min_squared_distance(polytope: Polytope) -> GoldenNumber:
    """Exact minimal squared inter-vertex distance (the squared edge length)."""
    from . import _intrep
    if polytope.vertex_count < 2:
        raise ValueError("need at least two vertices")
    arr, scale = _intrep.int_pairs(polytope.vertices)
    na, nb = _intrep.pairwise_norm2(arr)
    a, b = _intrep.min_offdiag_value(na, nb)
    return _intrep.pair_to_golden(a, b, scale * scale)


def rescale(polytope: Polytope, factor: GoldenNumber) -> Polytope:
    """Multiply every coordinate by an exact positive factor."""
    factor = GoldenNumber.coerce(factor)
    if factor.sign() <= 0:
        raise ValueError("rescale factor must be positive")
    vertices = tuple(v * factor for v in polytope.vertices)
    return replace(polytope, vertices=vertices, scale=polytope.scale * factor)


def normalize_unit_edge(polytope: Polytope) -> Polytope:
    """Rescale so the minimal inter-vertex distance is exactly 1."""
    edge2 = min_squared_distance(polytope)
    edge = golden_sqrt(edge2)
    if edge is None:
        raise ValueError("edge length does not lie in Q(sqrt5)")
    if edge == ONE:
        return polytope
    return rescale(polytope, ONE / edge)
