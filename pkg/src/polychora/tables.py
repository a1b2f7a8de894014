"""Published vertex/adjacency tables: loading, validation, cross-checking.

The bundled CSVs transcribe the published 10-decimal coordinate tables and
joint-relation lists for the 120-cell and 600-cell.  The validator reports
errata (it never repairs them): radius and edge-length outliers against
robust references, asymmetric joint lists, duplicated coordinate rows,
degree violations, and a rotation-invariant distance-spectrum comparison
against canonical ground truth.  The tolerance ladder grows one order per
step as more printed digits compound: 1e-9 duplicates, 1e-6 radius/edge,
1e-5 spectrum, 1e-4 adjacency recomputation.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .build import Polytope
from .catalog import polytope as catalog_polytope

DUPLICATE_TOL = 1e-9
RADIUS_TOL = 1e-6
EDGE_TOL = 1e-6
SPECTRUM_TOL = 1e-5
ADJACENCY_TOL = 1e-4

_EDGES_PER_VERTEX = {"tesseract": 4, "120-cell": 4, "600-cell": 12}

BUNDLED = {
    "120cell_vertices": "120cell_vertices.csv",
    "120cell_joints": "120cell_joints.csv",
    "600cell_vertices": "600cell_vertices.csv",
    "600cell_joints": "600cell_joints.csv",
}


class TableFormatError(ValueError):
    """A table file does not conform to the CSV schema."""


@dataclass(frozen=True)
class TableRecord:
    index: int
    coords: tuple[float, float, float, float]


@dataclass(frozen=True)
class JointRecord:
    index: int
    neighbors: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    radius_outliers: tuple[tuple[int, float], ...]
    edge_outliers: tuple[tuple[tuple[int, int], float, float], ...]
    asymmetric_pairs: tuple[tuple[int, int], ...]
    duplicate_rows: tuple[tuple[int, int], ...]
    degree_violations: tuple[tuple[int, int], ...]
    spectrum_match_fraction: float
    spectrum_mismatches: tuple[tuple[int, float, float], ...]

    @property
    def has_findings(self) -> bool:
        return bool(self.radius_outliers or self.edge_outliers
                    or self.asymmetric_pairs or self.duplicate_rows
                    or self.degree_violations
                    or self.spectrum_match_fraction < 1.0)

    def to_dict(self) -> dict:
        return {
            "radius_outliers": [[i, d] for i, d in self.radius_outliers],
            "edge_outliers": [[list(pair), dist, dev]
                              for pair, dist, dev in self.edge_outliers],
            "asymmetric_pairs": [list(p) for p in self.asymmetric_pairs],
            "duplicate_rows": [list(p) for p in self.duplicate_rows],
            "degree_violations": [list(p) for p in self.degree_violations],
            "spectrum_match_fraction": self.spectrum_match_fraction,
            "spectrum_mismatches": [[k, t, c]
                                    for k, t, c in self.spectrum_mismatches],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ValidationReport":
        return cls(
            radius_outliers=tuple((int(i), float(d))
                                  for i, d in data["radius_outliers"]),
            edge_outliers=tuple((tuple(int(x) for x in pair), float(dist), float(dev))
                                for pair, dist, dev in data["edge_outliers"]),
            asymmetric_pairs=tuple(tuple(int(x) for x in p)
                                   for p in data["asymmetric_pairs"]),
            duplicate_rows=tuple(tuple(int(x) for x in p)
                                 for p in data["duplicate_rows"]),
            degree_violations=tuple(tuple(int(x) for x in p)
                                    for p in data["degree_violations"]),
            spectrum_match_fraction=float(data["spectrum_match_fraction"]),
            spectrum_mismatches=tuple((int(k), float(t), float(c))
                                      for k, t, c in data["spectrum_mismatches"]),
        )


@dataclass(frozen=True)
class AdjacencyDiff:
    agree: int
    missing: tuple[tuple[int, int], ...]   # recomputed edges absent from the lists
    extra: tuple[tuple[int, int], ...]     # listed pairs not recomputed as edges


def bundled_path(name: str) -> Path:
    """Path of one bundled data file (key or file name)."""
    filename = BUNDLED.get(name, name)
    return Path(str(resources.files("polychora") / "data" / filename))


def load_table(path) -> list[TableRecord]:
    """Load a coordinate CSV; loss-free to the 10 printed decimals."""
    records: list[TableRecord] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["index", "x1", "x2", "x3", "x4"]:
            raise TableFormatError(f"{path}: bad header {header}")
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 5:
                raise TableFormatError(f"{path}:{lineno}: expected 5 fields")
            try:
                index = int(row[0])
                coords = tuple(float(x) for x in row[1:])
            except ValueError as exc:
                raise TableFormatError(f"{path}:{lineno}: {exc}") from exc
            if index != len(records) + 1:
                raise TableFormatError(
                    f"{path}:{lineno}: index {index} breaks the 1..N sequence")
            records.append(TableRecord(index=index, coords=coords))
    if not records:
        raise TableFormatError(f"{path}: no data rows")
    return records


def load_joints(path) -> list[JointRecord]:
    """Load a joint-relation CSV (neighbors ;-separated, ascending)."""
    records: list[JointRecord] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["index", "neighbors"]:
            raise TableFormatError(f"{path}: bad header {header}")
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 2:
                raise TableFormatError(f"{path}:{lineno}: expected 2 fields")
            try:
                index = int(row[0])
                neighbors = tuple(int(x) for x in row[1].split(";") if x)
            except ValueError as exc:
                raise TableFormatError(f"{path}:{lineno}: {exc}") from exc
            if index != len(records) + 1:
                raise TableFormatError(
                    f"{path}:{lineno}: index {index} breaks the 1..N sequence")
            if index in neighbors:
                raise TableFormatError(f"{path}:{lineno}: self-loop at {index}")
            records.append(JointRecord(index=index, neighbors=neighbors))
    if not records:
        raise TableFormatError(f"{path}: no data rows")
    n = len(records)
    for rec in records:
        bad = [x for x in rec.neighbors if not 1 <= x <= n]
        if bad:
            raise TableFormatError(
                f"{path}: row {rec.index} has out-of-range neighbors {bad}")
    return records


def _coord_array(records: Sequence[TableRecord]) -> np.ndarray:
    return np.array([r.coords for r in records], dtype=float)


def _joint_pairs(joints: Sequence[JointRecord]) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for rec in joints:
        for j in rec.neighbors:
            pairs.add((min(rec.index, j), max(rec.index, j)))
    return pairs


def _condensed_distances(coords: np.ndarray) -> np.ndarray:
    gram = coords @ coords.T
    sq = np.add.outer(np.diag(gram), np.diag(gram)) - 2 * gram
    iu = np.triu_indices(len(coords), k=1)
    return np.sqrt(np.maximum(sq[iu], 0.0))


def _modal_value(values: np.ndarray, decimals: int = 6) -> float:
    """Most common value after binning; the median of the winning bin."""
    binned = np.round(values, decimals)
    mode_bin, _ = Counter(binned.tolist()).most_common(1)[0]
    return float(np.median(values[binned == mode_bin]))


def modal_edge_length(records: Sequence[TableRecord],
                      joints: Sequence[JointRecord]) -> float:
    """Most common distance among the listed adjacent pairs."""
    coords = _coord_array(records)
    pairs = sorted(_joint_pairs(joints))
    dists = np.array([np.linalg.norm(coords[i - 1] - coords[j - 1])
                      for i, j in pairs])
    return _modal_value(dists)


def _expected_degree(canonical: Polytope | None,
                     joints: Sequence[JointRecord]) -> int:
    if canonical is not None:
        return _EDGES_PER_VERTEX[canonical.descriptor.name]
    degree_mode, _ = Counter(len(r.neighbors) for r in joints).most_common(1)[0]
    return degree_mode


def _infer_canonical(records: Sequence[TableRecord]) -> Polytope:
    by_count = {600: "120-cell", 120: "600-cell", 16: "tesseract"}
    name = by_count.get(len(records))
    if name is None:
        raise ValueError(
            f"cannot infer the canonical polytope for {len(records)} rows")
    return catalog_polytope(name)


def _canonical_spectrum(canonical: Polytope, median_radius: float) -> np.ndarray:
    coords = np.array([v.to_floats() for v in canonical.vertices])
    center = coords.mean(axis=0)
    coords = coords - center
    radius = float(np.median(np.linalg.norm(coords, axis=1)))
    return np.sort(_condensed_distances(coords * (median_radius / radius)))


def validate(records: Sequence[TableRecord],
             joints: Sequence[JointRecord],
             canonical: Polytope | None = None) -> ValidationReport:
    """Errata report for one coordinate table plus its joint lists.

    The canonical reference defaults to the polytope with the matching
    vertex count.  The references are robust against the tables' own typos:
    median circumradius and modal edge length.
    """
    if canonical is None:
        canonical = _infer_canonical(records)
    if canonical.vertex_count != len(records):
        raise ValueError(
            f"canonical {canonical.descriptor.name} has "
            f"{canonical.vertex_count} vertices, table has {len(records)}")
    coords = _coord_array(records)

    norms = np.linalg.norm(coords, axis=1)
    median_radius = float(np.median(norms))
    radius_outliers = tuple(
        (records[i].index, float(norms[i] - median_radius))
        for i in np.flatnonzero(np.abs(norms - median_radius) > RADIUS_TOL))

    pairs = sorted(_joint_pairs(joints))
    pair_dists = np.array([np.linalg.norm(coords[i - 1] - coords[j - 1])
                           for i, j in pairs])
    modal_edge = _modal_value(pair_dists)
    edge_outliers = tuple(
        (pairs[k], float(pair_dists[k]), float(pair_dists[k] - modal_edge))
        for k in np.flatnonzero(np.abs(pair_dists - modal_edge) > EDGE_TOL))

    neighbor_sets = {rec.index: set(rec.neighbors) for rec in joints}
    asymmetric = tuple(sorted(
        (rec.index, j) for rec in joints for j in rec.neighbors
        if rec.index not in neighbor_sets.get(j, set())))

    gram = coords @ coords.T
    sq = np.add.outer(np.diag(gram), np.diag(gram)) - 2 * gram
    close = np.triu(sq < DUPLICATE_TOL ** 2, k=1)
    duplicate_rows = tuple((records[i].index, records[j].index)
                           for i, j in zip(*np.nonzero(close)))

    expected_degree = _expected_degree(canonical, joints)
    degree_violations = tuple(
        (rec.index, len(rec.neighbors)) for rec in joints
        if len(rec.neighbors) != expected_degree)

    table_spectrum = np.sort(_condensed_distances(coords))
    canon_spectrum = _canonical_spectrum(canonical, median_radius)
    deltas = np.abs(table_spectrum - canon_spectrum)
    bad = np.flatnonzero(deltas > SPECTRUM_TOL)
    mismatches = tuple((int(k), float(table_spectrum[k]), float(canon_spectrum[k]))
                       for k in bad)
    fraction = 1.0 - len(bad) / len(table_spectrum)

    return ValidationReport(
        radius_outliers=radius_outliers,
        edge_outliers=edge_outliers,
        asymmetric_pairs=asymmetric,
        duplicate_rows=duplicate_rows,
        degree_violations=degree_violations,
        spectrum_match_fraction=fraction,
        spectrum_mismatches=mismatches,
    )


def cross_check_adjacency(records: Sequence[TableRecord],
                          joints: Sequence[JointRecord]) -> AdjacencyDiff:
    """Diff the printed joint lists against adjacency recomputed from the
    coordinates (pairs within 1e-4 of the modal minimal distance)."""
    coords = _coord_array(records)
    n = len(records)
    gram = coords @ coords.T
    sq = np.add.outer(np.diag(gram), np.diag(gram)) - 2 * gram
    iu = np.triu_indices(n, k=1)
    dists = np.sqrt(np.maximum(sq[iu], 0.0))
    # Smallest genuine distance band (ignore near-duplicate rows at ~0).
    nonzero = dists[dists > 1e-6]
    dmin = float(nonzero.min())
    band = nonzero[nonzero <= dmin + 2 * ADJACENCY_TOL]
    modal_min = float(np.median(band))
    mask = np.abs(dists - modal_min) <= ADJACENCY_TOL
    recomputed = {(int(iu[0][k]) + 1, int(iu[1][k]) + 1)
                  for k in np.flatnonzero(mask)}
    printed = _joint_pairs(joints)
    return AdjacencyDiff(
        agree=len(recomputed & printed),
        missing=tuple(sorted(recomputed - printed)),
        extra=tuple(sorted(printed - recomputed)),
    )


def write_vertices_csv(polytope: Polytope, exact: bool = False) -> str:
    """Vertex CSV in the table format: 10-decimal fixed point or exact."""
    lines = ["index,x1,x2,x3,x4"]
    for k, v in enumerate(polytope.vertices, start=1):
        if exact:
            fields = [c.exact_str() for c in v.components()]
        else:
            fields = [c.fixed(10) for c in v.components()]
        lines.append(f"{k}," + ",".join(fields))
    return "\n".join(lines) + "\n"


def write_joints_csv(neighbor_lists: Iterable[Sequence[int]]) -> str:
    """Joint CSV from 0-based neighbor lists (written 1-based, ascending)."""
    lines = ["index,neighbors"]
    for k, neighbors in enumerate(neighbor_lists, start=1):
        lines.append(f"{k}," + ";".join(str(j + 1) for j in sorted(neighbors)))
    return "\n".join(lines) + "\n"
