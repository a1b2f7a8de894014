"""Exact enumeration of edges, 2-faces and 3-cells of a regular 4-polytope.

All decisions are exact:

* edges are the pairs realizing the exact minimal squared distance (the fixed
  inter-vertex distance that defines adjacency);
* a face is accepted only when the exact coplanar closure of two adjacent
  edges induces a single p-cycle in the edge graph, which rejects accidental
  coplanar vertex sets (e.g. central planes) without thresholds;
* a cell is the zero set of an exact supporting hyperplane spanned by a face
  and one adjacent off-plane vertex.

Bulk scans (pair distances, coplanarity closures, hyperplane sides) run on
the integer-pair representation from `_intrep`, so they are both exact and
vectorized; plane membership functionals and cell normals come from exact
division-free cofactor expansions in the same representation.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _intrep
from .build import Polytope
from .golden import Vec4


class StructureError(RuntimeError):
    """The enumerated data violates a structural invariant (corrupt input)."""


@dataclass(frozen=True, eq=False)
class IncidenceComplex:
    polytope: Polytope
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[int, ...], ...]
    cell_normals: tuple[Vec4, ...]
    edge_to_faces: tuple[tuple[int, ...], ...]
    face_to_cells: tuple[tuple[int, ...], ...]
    cell_to_faces: tuple[tuple[int, ...], ...]
    vertex_to_edges: tuple[tuple[int, ...], ...]
    vertex_to_faces: tuple[tuple[int, ...], ...]
    vertex_to_cells: tuple[tuple[int, ...], ...]

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.polytope.vertex_count, len(self.edges),
                len(self.faces), len(self.cells))


@dataclass(frozen=True)
class IncidenceProfile:
    edges_per_vertex: int
    faces_per_edge: int
    cells_per_edge: int
    cells_per_vertex: int
    cells_per_face: int


def _adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def enumerate_edges(polytope: Polytope) -> tuple[tuple[int, int], ...]:
    """All vertex pairs at the exact minimal squared distance."""
    if polytope.vertex_count < 2:
        raise ValueError("need at least two vertices")
    arr, _ = _intrep.int_pairs(polytope.vertices)
    na, nb = _intrep.pairwise_norm2(arr)
    ma, mb = _intrep.min_offdiag_value(na, nb)
    mask = np.triu((na == ma) & (nb == mb), k=1)
    ii, jj = np.nonzero(mask)
    return tuple(zip(ii.tolist(), jj.tolist()))


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    # Smallest index first, then its smaller neighbor second.
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def _single_cycle(closure: list[int], adj: list[set[int]]) -> tuple[int, ...] | None:
    """The closure's induced subgraph as one cycle covering it, else None."""
    members = set(closure)
    for v in closure:
        if len(adj[v] & members) != 2:
            return None
    start = min(closure)
    cycle = [start]
    prev, cur = -1, start
    while True:
        nxt = min(x for x in adj[cur] & members if x != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(closure):
            return None
    return tuple(cycle) if len(cycle) == len(closure) else None


def _coplanar_closure(arr: np.ndarray, u: int, v: int, w: int) -> list[int] | None:
    """Indices of all vertices exactly in the 2-flat through u, v, w.

    None when the three points are collinear.  Works on the integer-pair
    array: membership is the vanishing of four exact minor functionals.
    """
    funcs = _intrep.plane_functionals(arr[v] - arr[u], arr[w] - arr[u])
    if funcs is None:
        return None
    mask = np.ones(arr.shape[0], dtype=bool)
    for k in range(4):
        da, db = _intrep.dot_pairs(arr, funcs[k])
        mask &= (da == da[u]) & (db == db[u])
    return np.flatnonzero(mask).tolist()


def enumerate_faces(polytope: Polytope, edges) -> tuple[tuple[int, ...], ...]:
    """All 2-faces as canonical vertex cycles.

    For each unconsumed angle (u, v, w) of two incident edges, the exact
    coplanar closure is collected over all vertices and accepted only if its
    induced edge subgraph is a single cycle of length p through u, v, w.
    Every angle of a found face is marked consumed, so each face's plane is
    scanned exactly once.  For triangular faces (p = 3) only angles with u, w
    themselves adjacent can close, so the others are skipped outright.
    """
    verts = polytope.vertices
    p = polytope.descriptor.p
    adj = _adjacency(len(verts), edges)
    arr, _ = _intrep.int_pairs(verts)
    consumed: set[tuple[int, int, int]] = set()
    seen: set[frozenset[int]] = set()
    faces: list[tuple[int, ...]] = []
    for v in range(len(verts)):
        for u, w in combinations(sorted(adj[v]), 2):
            if (u, v, w) in consumed:
                continue
            if p == 3 and w not in adj[u]:
                continue
            closure = _coplanar_closure(arr, u, v, w)
            if closure is None or len(closure) != p:
                continue
            cycle = _single_cycle(closure, adj)
            if cycle is None or not {u, v, w} <= set(cycle):
                continue
            key = frozenset(cycle)
            if key not in seen:
                seen.add(key)
                faces.append(_canonical_cycle(cycle))
            for i, b in enumerate(cycle):
                a, c = cycle[i - 1], cycle[(i + 1) % len(cycle)]
                consumed.add((min(a, c), b, max(a, c)))
    return tuple(sorted(faces))


def enumerate_cells(polytope: Polytope, faces
                    ) -> tuple[tuple[tuple[int, ...], ...], tuple[Vec4, ...]]:
    """All 3-cells (as sorted vertex tuples) with their exact normals.

    Each cell is found as the zero set of a supporting hyperplane spanned by
    a face plus one adjacent vertex exactly outside the face's plane.  The
    candidates tried for a face F are the cheapest sufficient ones: for each
    other face G sharing F's first edge, the vertex of G next to that edge
    (the cells containing F each contain such a G, so nothing is missed).
    Found cells register against every face they contain, so each cell's
    hyperplane is confirmed only once; a face that does not end up with
    exactly two cells indicates corrupted input.
    """
    verts = polytope.vertices
    n = len(verts)
    arr, _ = _intrep.int_pairs(verts)
    vertex_faces: list[list[int]] = [[] for _ in range(n)]
    edge_faces: dict[tuple[int, int], list[int]] = defaultdict(list)
    for fi, face in enumerate(faces):
        for i, a in enumerate(face):
            vertex_faces[a].append(fi)
            b = face[(i + 1) % len(face)]
            edge_faces[(min(a, b), max(a, b))].append(fi)
    face_sets = [frozenset(f) for f in faces]

    cells: list[tuple[int, ...]] = []
    cell_sets: list[frozenset[int]] = []
    normals: list[Vec4] = []
    face_cells: list[list[int]] = [[] for _ in faces]

    def neighbor_in_face(gface: tuple[int, ...], a: int, avoid: int) -> int:
        i = gface.index(a)
        before, after = gface[i - 1], gface[(i + 1) % len(gface)]
        return after if before == avoid else before

    for fi, face in enumerate(faces):
        f0, f1, f2 = face[0], face[1], face[2]
        funcs = _intrep.plane_functionals(arr[f1] - arr[f0], arr[f2] - arr[f0])
        if funcs is None:
            raise StructureError(f"face {fi} is degenerate")
        inplane = np.ones(n, dtype=bool)
        for k in range(4):
            da, db = _intrep.dot_pairs(arr, funcs[k])
            inplane &= (da == da[f0]) & (db == db[f0])
        e = (min(f0, f1), max(f0, f1))
        candidates = sorted(neighbor_in_face(faces[gfi], f0, f1)
                            for gfi in edge_faces[e] if gfi != fi)
        for x in candidates:
            if len(face_cells[fi]) == 2:
                break
            if inplane[x]:
                raise StructureError(f"adjacent face of face {fi} is coplanar with it")
            if any(x in cell_sets[ci] for ci in face_cells[fi]):
                continue
            npair = _intrep.cross4(arr[f1] - arr[f0], arr[f2] - arr[f0],
                                   arr[x] - arr[f0])
            if not npair.any():
                raise StructureError("face plus off-plane vertex must span rank 3")
            da, db = _intrep.dot_pairs(arr, npair)
            signs = _intrep.sign_pairs(da - da[f0], db - db[f0])
            if signs.min() >= 0 or signs.max() <= 0:
                members = tuple(np.flatnonzero(signs == 0).tolist())
                ci = len(cells)
                cells.append(members)
                mset = frozenset(members)
                cell_sets.append(mset)
                normals.append(Vec4(*(_intrep.pair_to_golden(a, b)
                                      for a, b in npair.tolist())))
                touched = {gfi for v in members for gfi in vertex_faces[v]}
                for gfi in touched:
                    if face_sets[gfi] <= mset:
                        face_cells[gfi].append(ci)
        if len(face_cells[fi]) != 2:
            raise StructureError(
                f"face {fi} has {len(face_cells[fi])} supporting extensions, expected 2")
    order = sorted(range(len(cells)), key=lambda i: cells[i])
    return (tuple(cells[i] for i in order),
            tuple(normals[i] for i in order))


def build_complex(polytope: Polytope) -> IncidenceComplex:
    """Full incidence structure: elements plus all incidence maps."""
    edges = enumerate_edges(polytope)
    faces = enumerate_faces(polytope, edges)
    cells, normals = enumerate_cells(polytope, faces)

    edge_index = {e: k for k, e in enumerate(edges)}
    edge_to_faces: list[list[int]] = [[] for _ in edges]
    for fi, face in enumerate(faces):
        for i, a in enumerate(face):
            b = face[(i + 1) % len(face)]
            edge_to_faces[edge_index[(min(a, b), max(a, b))]].append(fi)

    cell_sets = [frozenset(c) for c in cells]
    vertex_cells: list[list[int]] = [[] for _ in range(polytope.vertex_count)]
    for ci, cell in enumerate(cells):
        for v in cell:
            vertex_cells[v].append(ci)
    face_to_cells: list[list[int]] = [[] for _ in faces]
    cell_to_faces: list[list[int]] = [[] for _ in cells]
    for fi, face in enumerate(faces):
        incident = set(vertex_cells[face[0]])
        for v in face[1:]:
            incident &= set(vertex_cells[v])
        hits = sorted(ci for ci in incident if frozenset(face) <= cell_sets[ci])
        if len(hits) != 2:
            raise StructureError(f"face {fi} lies in {len(hits)} cells, expected 2")
        face_to_cells[fi] = hits
        for ci in hits:
            cell_to_faces[ci].append(fi)

    vertex_edges: list[list[int]] = [[] for _ in range(polytope.vertex_count)]
    for k, (i, j) in enumerate(edges):
        vertex_edges[i].append(k)
        vertex_edges[j].append(k)
    vertex_faces: list[list[int]] = [[] for _ in range(polytope.vertex_count)]
    for fi, face in enumerate(faces):
        for v in face:
            vertex_faces[v].append(fi)

    return IncidenceComplex(
        polytope=polytope,
        edges=edges,
        faces=faces,
        cells=cells,
        cell_normals=normals,
        edge_to_faces=tuple(tuple(x) for x in edge_to_faces),
        face_to_cells=tuple(tuple(x) for x in face_to_cells),
        cell_to_faces=tuple(tuple(sorted(x)) for x in cell_to_faces),
        vertex_to_edges=tuple(tuple(x) for x in vertex_edges),
        vertex_to_faces=tuple(tuple(x) for x in vertex_faces),
        vertex_to_cells=tuple(tuple(x) for x in vertex_cells),
    )


def incidence_profile(cx: IncidenceComplex) -> IncidenceProfile:
    """The five incidence constants; raises if any count is not constant."""
    def constant(label: str, counts) -> int:
        values = set(counts)
        if len(values) != 1:
            raise StructureError(f"{label} is not constant: {sorted(values)}")
        return values.pop()

    cells_per_edge = []
    for i, j in cx.edges:
        shared = set(cx.vertex_to_cells[i]) & set(cx.vertex_to_cells[j])
        cells_per_edge.append(len(shared))
    return IncidenceProfile(
        edges_per_vertex=constant("edges per vertex",
                                  (len(x) for x in cx.vertex_to_edges)),
        faces_per_edge=constant("faces per edge",
                                (len(x) for x in cx.edge_to_faces)),
        cells_per_edge=constant("cells per edge", cells_per_edge),
        cells_per_vertex=constant("cells per vertex",
                                  (len(x) for x in cx.vertex_to_cells)),
        cells_per_face=constant("cells per face",
                                (len(x) for x in cx.face_to_cells)),
    )


def adjacency_lists(cx: IncidenceComplex) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbor indices per vertex (0-based)."""
    adj = _adjacency(cx.polytope.vertex_count, cx.edges)
    return tuple(tuple(sorted(s)) for s in adj)


def complex_to_json(cx: IncidenceComplex) -> str:
    """JSON export with 1-based indices."""
    payload = {
        "vertices": cx.polytope.vertex_count,
        "edges": [[i + 1, j + 1] for i, j in cx.edges],
        "faces": [[v + 1 for v in face] for face in cx.faces],
        "cells": [[v + 1 for v in cell] for cell in cx.cells],
    }
    return json.dumps(payload)
