"""Metric values: distances, the three angle families, contents, scaling."""

import math
import random
from fractions import Fraction

import pytest

from polychora import catalog, measure, tables
from polychora.golden import GoldenNumber, PHI, Vec4

# Closed forms, frozen from 50-digit evaluation.
ANGLE_FACES_120 = 116.56505117707799     # arccos(-1/sqrt5)
ANGLE_FACES_600 = 70.52877936550931      # arccos(1/3)
ANGLE_CELLS_600 = 164.47751218592992     # 180 - arccos((1+3*sqrt5)/8)
TETRA_VOLUME = 0.11785113019775793       # 1/(6*sqrt2), unit edge
DODECA_VOLUME = 7.663118960624632        # (15+7*sqrt5)/4, unit edge
S_120, V_120 = 919.5742838, 787.8569889  # published boundary/volume, unit edge
S_600, V_600 = 70.710678, 26.475425


class TestDistance:
    def test_unit_hypercube_diagonal(self):
        assert measure.distance(Vec4(0, 0, 0, 0), Vec4(1, 1, 1, 1)) == 2.0

    def test_table_rows_600cell(self):
        recs = tables.load_table(tables.bundled_path("600cell_vertices"))
        d = math.dist(recs[0].coords, recs[1].coords)
        assert d == pytest.approx(1.0, abs=1e-8)

    def test_table_rows_120cell(self):
        recs = tables.load_table(tables.bundled_path("120cell_vertices"))
        d = math.dist(recs[30].coords, recs[31].coords)  # rows 31 and 32
        assert d == pytest.approx(0.4045084972, abs=1e-9)


class TestAngleBetween:
    def test_orthogonal(self):
        assert measure.angle_between(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0)) == 90.0

    def test_opposite(self):
        assert measure.angle_between(Vec4(1, 0, 0, 0), Vec4(-1, 0, 0, 0)) == 180.0

    def test_pentagon_corner(self, cx120):
        face = cx120.faces[0]
        verts = cx120.polytope.vertices
        angle = measure.angle_between(verts[face[-1]] - verts[face[0]],
                                      verts[face[1]] - verts[face[0]])
        assert angle == pytest.approx(108.0, abs=1e-6)

    def test_symmetry_and_self(self):
        rng = random.Random(77)
        for _ in range(100):
            u = Vec4(*(rng.randint(-5, 5) for _ in range(4)))
            v = Vec4(*(rng.randint(-5, 5) for _ in range(4)))
            if u.is_zero or v.is_zero:
                continue
            assert measure.angle_between(u, v) == measure.angle_between(v, u)
            assert measure.angle_between(u, u) == 0.0

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            measure.angle_between(Vec4(0, 0, 0, 0), Vec4(1, 0, 0, 0))


class TestAngles:
    def test_120cell(self, m120):
        assert measure.edge_edge_angle(m120) == pytest.approx(108.0, abs=1e-6)
        assert measure.face_face_angle(m120) == pytest.approx(
            ANGLE_FACES_120, abs=1e-9)
        assert measure.face_face_angle(m120) == pytest.approx(
            116.5650507, abs=1e-6)  # published print
        assert measure.cell_cell_angle(m120) == pytest.approx(144.0, abs=1e-6)

    def test_600cell(self, m600):
        assert measure.edge_edge_angle(m600) == pytest.approx(60.0, abs=1e-6)
        assert measure.face_face_angle(m600) == pytest.approx(
            ANGLE_FACES_600, abs=1e-9)
        assert measure.face_face_angle(m600) == pytest.approx(
            70.52877936, abs=1e-6)  # published print
        assert measure.cell_cell_angle(m600) == pytest.approx(
            ANGLE_CELLS_600, abs=1e-9)

    def test_tesseract(self, m_tesseract):
        assert measure.edge_edge_angle(m_tesseract) == pytest.approx(90.0, abs=1e-9)
        assert measure.face_face_angle(m_tesseract) == pytest.approx(90.0, abs=1e-9)
        assert measure.cell_cell_angle(m_tesseract) == pytest.approx(90.0, abs=1e-9)

    def test_angle_ordering_invariant(self, m120, m600):
        for cx in (m120, m600):
            rep = measure.metrics_report(cx)
            assert 0 < rep.angle_edges_deg < rep.angle_faces_deg < 180


class TestVolumes:
    def test_cell_volume_600(self, m600):
        assert measure.cell_volume(m600, 0) == pytest.approx(TETRA_VOLUME, abs=1e-8)

    def test_cell_volume_120(self, m120):
        assert measure.cell_volume(m120, 0) == pytest.approx(DODECA_VOLUME, abs=1e-7)

    def test_cell_volume_tesseract(self, m_tesseract):
        assert measure.cell_volume(m_tesseract, 0) == pytest.approx(1.0, abs=1e-12)

    def test_boundary_and_hypervolume_120(self, m120):
        assert measure.boundary_content(m120) == pytest.approx(S_120, rel=1e-5)
        assert measure.hypervolume(m120) == pytest.approx(V_120, rel=1e-5)

    def test_boundary_and_hypervolume_600(self, m600):
        assert measure.boundary_content(m600) == pytest.approx(S_600, rel=1e-5)
        assert measure.hypervolume(m600) == pytest.approx(V_600, rel=1e-5)

    def test_boundary_and_hypervolume_tesseract(self, m_tesseract):
        assert measure.boundary_content(m_tesseract) == pytest.approx(8.0, abs=1e-12)
        assert measure.hypervolume(m_tesseract) == pytest.approx(1.0, abs=1e-12)

    def test_cone_identity(self, m120, m600, m_tesseract):
        for cx in (m120, m600, m_tesseract):
            rep = measure.metrics_report(cx)
            assert rep.hypervolume == pytest.approx(
                rep.inradius * rep.boundary_content / 4.0, rel=1e-9)


class TestScaling:
    @pytest.mark.parametrize("factor", [
        GoldenNumber(Fraction(3, 2)),
        PHI,
        GoldenNumber(Fraction(7, 5), Fraction(1, 5)),
    ])
    def test_scaling_laws(self, m600, factor):
        scaled = catalog.rescale_complex(m600, factor)
        s = float(factor)
        base = measure.metrics_report(m600)
        rep = measure.metrics_report(scaled)
        assert rep.edge_length == pytest.approx(s * base.edge_length, rel=1e-9)
        assert rep.angle_edges_deg == pytest.approx(base.angle_edges_deg, abs=1e-9)
        assert rep.angle_faces_deg == pytest.approx(base.angle_faces_deg, abs=1e-9)
        assert rep.angle_cells_deg == pytest.approx(base.angle_cells_deg, abs=1e-9)
        assert rep.boundary_content == pytest.approx(
            s ** 3 * base.boundary_content, rel=1e-9)
        assert rep.hypervolume == pytest.approx(
            s ** 4 * base.hypervolume, rel=1e-9)
