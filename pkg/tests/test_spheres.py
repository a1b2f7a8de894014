"""Four-sphere vertex location: round trips, degeneracy, mirror roots."""

import random

import numpy as np
import pytest

from polychora.spheres import (DegenerateCentersError, SphereSystem,
                               residuals, solve_vertex)


def second_shell(coords: np.ndarray, t: int) -> tuple[float, np.ndarray]:
    """Second-smallest inter-vertex distance from t and who attains it."""
    d = np.linalg.norm(coords - coords[t], axis=1)
    values = np.sort(np.unique(np.round(d, 9)))
    shell = float(values[2])  # 0, edge, second
    return shell, np.flatnonzero(np.abs(d - shell) < 1e-6)


@pytest.fixture(scope="module")
def coords600(cx600):
    return np.array([v.to_floats() for v in cx600.polytope.vertices])


@pytest.fixture(scope="module")
def adjacency600(cx600):
    from polychora.incidence import adjacency_lists
    return adjacency_lists(cx600)


def system_for_vertex(coords, adjacency, t: int) -> tuple[SphereSystem, float]:
    neighbors = adjacency[t]
    edge = float(np.linalg.norm(coords[t] - coords[neighbors[0]]))
    shell, attained = second_shell(coords, t)
    centers = [tuple(coords[n]) for n in neighbors[:3]]
    centers.append(tuple(coords[int(attained[0])]))
    return SphereSystem(centers=tuple(centers), a=edge, b=shell), edge


class TestRoundTrip:
    def test_fifty_random_vertices(self, coords600, adjacency600):
        rng = random.Random(600)
        for t in rng.sample(range(len(coords600)), 50):
            system, _ = system_for_vertex(coords600, adjacency600, t)
            roots = solve_vertex(system)
            assert 1 <= len(roots) <= 2
            best = min(np.abs(np.asarray(r) - coords600[t]).max()
                       for r in roots)
            assert best < 1e-9
            for r in roots:
                assert max(abs(x) for x in residuals(system, r)) < 1e-8


class TestDegenerate:
    def test_collinear_centers(self):
        centers = tuple((float(k), 0.0, 0.0, 0.0) for k in range(4))
        with pytest.raises(DegenerateCentersError):
            solve_vertex(SphereSystem(centers=centers, a=1.0, b=2.0))

    def test_coplanar_centers(self):
        centers = ((0.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0),
                   (0.0, 1.0, 0.0, 0.0), (1.0, 1.0, 0.0, 0.0))
        with pytest.raises(DegenerateCentersError):
            solve_vertex(SphereSystem(centers=centers, a=1.0, b=1.5))

    def test_coincident_centers(self):
        centers = ((0.0, 0.0, 0.0, 0.0),) * 4
        with pytest.raises(DegenerateCentersError):
            solve_vertex(SphereSystem(centers=centers, a=1.0, b=2.0))


class TestValidation:
    def test_bad_radii(self):
        centers = ((0.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0),
                   (0.0, 1.0, 0.0, 0.0), (0.0, 0.0, 1.0, 0.0))
        with pytest.raises(ValueError):
            SphereSystem(centers=centers, a=0.0, b=1.0)
        with pytest.raises(ValueError):
            SphereSystem(centers=centers, a=1.0, b=0.5)

    def test_wrong_center_count(self):
        with pytest.raises(ValueError):
            SphereSystem(centers=((0.0,) * 4,) * 3, a=1.0, b=2.0)


class TestRootGeometry:
    def test_mirror_pair(self, coords600, adjacency600):
        # Reflecting a known solution through the centers' affine hull must
        # produce the other root, symmetric about the hull.
        system, _ = system_for_vertex(coords600, adjacency600, 17)
        roots = solve_vertex(system)
        assert len(roots) == 2
        c = np.asarray(system.centers)
        basis = np.linalg.qr((c[1:] - c[0]).T)[0]  # (4, 3) orthonormal
        r1, r2 = (np.asarray(r) for r in roots)
        mid = (r1 + r2) / 2.0
        # midpoint lies in the hull: its offset has no normal component
        offset = mid - c[0]
        in_hull = basis @ (basis.T @ offset)
        assert np.abs(offset - in_hull).max() < 1e-9
        # the two roots mirror one another across the hull
        d1 = r1 - c[0] - basis @ (basis.T @ (r1 - c[0]))
        d2 = r2 - c[0] - basis @ (basis.T @ (r2 - c[0]))
        assert np.abs(d1 + d2).max() < 1e-9

    def test_empty_solution_reported_as_no_roots(self):
        centers = ((0.0, 0.0, 0.0, 0.0), (10.0, 0.0, 0.0, 0.0),
                   (0.0, 10.0, 0.0, 0.0), (0.0, 0.0, 10.0, 0.0))
        system = SphereSystem(centers=centers, a=0.1, b=0.2)
        assert solve_vertex(system) == []

    def test_tangent_single_root(self):
        # Solution exactly inside the centers' affine hull: the quadratic
        # degenerates to a (near-)double root at the solution itself.
        t = np.array([0.3, 0.1, 0.2, 0.0])
        r, b = 1.25, 2.5
        directions = (np.array([1.0, 0.0, 0.0, 0.0]),
                      np.array([0.0, 1.0, 0.0, 0.0]),
                      np.array([0.0, 0.0, 1.0, 0.0]))
        centers = [tuple(t + r * d) for d in directions]
        centers.append(tuple(t + b * np.array([0.6, -0.8, 0.0, 0.0])))
        system = SphereSystem(centers=tuple(centers), a=r, b=b)
        roots = solve_vertex(system)
        assert 1 <= len(roots) <= 2
        for root in roots:
            assert np.abs(np.asarray(root) - t).max() < 1e-7

    def test_translation_equivariance(self, coords600, adjacency600):
        system, _ = system_for_vertex(coords600, adjacency600, 42)
        shift = np.array([0.25, -1.5, 3.0, 0.125])
        moved = SphereSystem(
            centers=tuple(tuple(np.asarray(c) + shift) for c in system.centers),
            a=system.a, b=system.b)
        base_roots = sorted(solve_vertex(system))
        moved_roots = sorted(solve_vertex(moved))
        assert len(base_roots) == len(moved_roots)
        for r1, r2 in zip(base_roots, moved_roots):
            assert np.abs(np.asarray(r1) + shift - np.asarray(r2)).max() < 1e-9
