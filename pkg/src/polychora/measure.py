"""Angles, boundary 3-content, hypervolume and distances of the complexes.

All angle and volume arithmetic is float64 over exact inputs: vertex
coordinates and cell normals are converted once per complex, orientation
signs are decided exactly, and the float noise stays orders of magnitude
below the asserted tolerances.  Configuration sampling checks that each
angle is constant over the complex and raises when it is not.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .golden import GoldenNumber, Vec4, ZERO
from .incidence import IncidenceComplex, StructureError

ANGLE_SPREAD_TOL = 1e-9  # degrees; sampled configurations must agree this well
_MAX_SAMPLES = 500


@dataclass(frozen=True)
class MetricsReport:
    edge_length: float
    angle_edges_deg: float
    angle_faces_deg: float
    angle_cells_deg: float
    boundary_content: float
    hypervolume: float
    inradius: float


def distance(a: Vec4, b: Vec4) -> float:
    """Euclidean distance: exact squared norm, then one float square root."""
    return math.sqrt(float((a - b).norm2()))


def angle_between(u: Vec4, v: Vec4) -> float:
    """Included angle of two nonzero vectors, in degrees within [0, 180]."""
    if u.is_zero or v.is_zero:
        raise ValueError("angle of a zero vector is undefined")
    cosine = float(u.dot(v)) / math.sqrt(float(u.norm2()) * float(v.norm2()))
    return math.degrees(math.acos(max(-1.0, min(1.0, cosine))))


@lru_cache(maxsize=16)
def _float_coords(cx: IncidenceComplex) -> np.ndarray:
    return np.array([v.to_floats() for v in cx.polytope.vertices], dtype=float)


def _cell_centroid_exact(cx: IncidenceComplex, ci: int) -> Vec4:
    cell = cx.cells[ci]
    acc = Vec4(ZERO, ZERO, ZERO, ZERO)
    for v in cell:
        acc = acc + cx.polytope.vertices[v]
    return acc * GoldenNumber(Fraction(1, len(cell)))


@lru_cache(maxsize=16)
def _outward_normals(cx: IncidenceComplex) -> np.ndarray:
    """Unit outward cell normals; the outward side is decided exactly."""
    center = cx.polytope.centroid()
    out = np.empty((len(cx.cells), 4), dtype=float)
    for ci, n in enumerate(cx.cell_normals):
        side = n.dot(_cell_centroid_exact(cx, ci) - center).sign()
        if side == 0:
            raise StructureError("cell centroid lies at the polytope center")
        row = np.array(n.to_floats())
        out[ci] = row * (side / np.linalg.norm(row))
    return out


def _angle_f(u: np.ndarray, v: np.ndarray) -> float:
    cosine = float(np.dot(u, v) / np.sqrt(np.dot(u, u) * np.dot(v, v)))
    return math.degrees(math.acos(max(-1.0, min(1.0, cosine))))


def _sample(items, limit: int = _MAX_SAMPLES):
    if len(items) <= limit:
        return items
    return random.Random(0).sample(items, limit)


def _constant_angle(label: str, angles: list[float]) -> float:
    if max(angles) - min(angles) > ANGLE_SPREAD_TOL:
        raise StructureError(
            f"{label} varies by {max(angles) - min(angles):.3e} degrees")
    return angles[0]


def edge_edge_angle(cx: IncidenceComplex) -> float:
    """Angle between the two face edges meeting at a face corner."""
    coords = _float_coords(cx)
    corners = [(face, i) for face in cx.faces for i in range(len(face))]
    angles = []
    for face, i in _sample(corners):
        v = coords[face[i]]
        angles.append(_angle_f(coords[face[i - 1]] - v,
                               coords[face[(i + 1) % len(face)]] - v))
    return _constant_angle("edge-edge angle", angles)


def face_face_angle(cx: IncidenceComplex) -> float:
    """Dihedral between two faces of one cell at a shared edge.

    Both directions run from the edge midpoint to the face centroids with
    their components along the edge removed, then one included angle.
    """
    coords = _float_coords(cx)
    configs = []
    for fis in cx.cell_to_faces:
        for a in range(len(fis)):
            for b in range(a + 1, len(fis)):
                shared = set(cx.faces[fis[a]]) & set(cx.faces[fis[b]])
                if len(shared) == 2:
                    configs.append((fis[a], fis[b], tuple(sorted(shared))))
    angles = []
    for fa, fb, (i, j) in _sample(configs):
        mid = (coords[i] + coords[j]) / 2.0
        edge = coords[j] - coords[i]
        edge_n2 = float(np.dot(edge, edge))
        dirs = []
        for fi in (fa, fb):
            d = coords[list(cx.faces[fi])].mean(axis=0) - mid
            d = d - edge * (np.dot(d, edge) / edge_n2)
            dirs.append(d)
        angles.append(_angle_f(dirs[0], dirs[1]))
    return _constant_angle("face-face angle", angles)


def cell_cell_angle(cx: IncidenceComplex) -> float:
    """Interior (dichoral) angle across a shared face: 180 deg minus the
    angle between the two outward cell normals."""
    normals = _outward_normals(cx)
    angles = []
    for fi in _sample(range(len(cx.faces))):
        c1, c2 = cx.face_to_cells[fi]
        angles.append(180.0 - _angle_f(normals[c1], normals[c2]))
    return _constant_angle("cell-cell angle", angles)


def cell_volume(cx: IncidenceComplex, ci: int) -> float:
    """3-volume of one cell by fan tetrahedralization.

    Apex at the cell centroid; each boundary face contributes one tetrahedron
    per boundary edge (apex, face centroid, edge ends), each of 3-volume
    sqrt(det Gram)/6.  A vanishing Gram determinant means corrupt input.
    """
    coords = _float_coords(cx)
    g = coords[list(cx.cells[ci])].mean(axis=0)
    total = 0.0
    for fi in cx.cell_to_faces[ci]:
        face = cx.faces[fi]
        ring = coords[list(face)] - g
        f = ring.mean(axis=0)
        nxt = np.roll(ring, -1, axis=0)
        # Gram determinants of (e0, e1, f) for every boundary edge at once.
        a00 = np.einsum("ij,ij->i", ring, ring)
        a01 = np.einsum("ij,ij->i", ring, nxt)
        a02 = ring @ f
        a11 = np.einsum("ij,ij->i", nxt, nxt)
        a12 = nxt @ f
        a22 = float(np.dot(f, f))
        det = (a00 * (a11 * a22 - a12 * a12)
               - a01 * (a01 * a22 - a12 * a02)
               + a02 * (a01 * a12 - a11 * a02))
        if det.min() <= 0:
            raise StructureError("degenerate tetrahedron in cell fan")
        total += float(np.sqrt(det).sum()) / 6.0
    return total


def _cell_plane_distances(cx: IncidenceComplex) -> np.ndarray:
    coords = _float_coords(cx)
    center = np.array(cx.polytope.centroid().to_floats())
    normals = _outward_normals(cx)
    anchors = coords[[cell[0] for cell in cx.cells]]
    return np.abs(np.einsum("ij,ij->i", anchors - center, normals))


def boundary_content(cx: IncidenceComplex) -> float:
    """Total 3-content of the boundary: the sum of all cell volumes."""
    return sum(cell_volume(cx, ci) for ci in range(len(cx.cells)))


def hypervolume(cx: IncidenceComplex) -> float:
    """Enclosed 4-content: one 4D pyramid (1/4 * height * volume) per cell."""
    heights = _cell_plane_distances(cx)
    return sum(h * cell_volume(cx, ci) / 4.0
               for ci, h in enumerate(heights.tolist()))


def inradius(cx: IncidenceComplex) -> float:
    """Distance from the center to the cell hyperplanes (constant by regularity)."""
    values = _cell_plane_distances(cx)
    if values.max() - values.min() > 1e-9 * values.max():
        raise StructureError("cell hyperplane distances are not constant")
    return float(values[0])


def metrics_report(cx: IncidenceComplex) -> MetricsReport:
    """The numeric-value block for one centered polytope complex."""
    i, j = cx.edges[0]
    return MetricsReport(
        edge_length=distance(cx.polytope.vertices[i], cx.polytope.vertices[j]),
        angle_edges_deg=edge_edge_angle(cx),
        angle_faces_deg=face_face_angle(cx),
        angle_cells_deg=cell_cell_angle(cx),
        boundary_content=boundary_content(cx),
        hypervolume=hypervolume(cx),
        inradius=inradius(cx),
    )
