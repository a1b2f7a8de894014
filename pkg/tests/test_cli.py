"""Command-line behavior: outputs, formats, determinism, exit codes."""

import json

from polychora import tables
from polychora.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_120cell_text(self, capsys, m120):
        code, out, _ = run_cli(capsys, "stats", "120-cell")
        assert code == 0
        assert "1200 edges" in out
        assert "144.0000000000" in out
        assert "919.574" in out
        assert "787.856" in out

    def test_json_round_trip(self, capsys, m600):
        code, out, _ = run_cli(capsys, "stats", "600-cell", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["counts"] == {"vertices": 120, "edges": 720,
                                     "faces": 1200, "cells": 600}
        assert json.loads(json.dumps(payload)) == payload

    def test_deterministic(self, capsys, m600):
        _, out1, _ = run_cli(capsys, "stats", "600-cell", "--json")
        _, out2, _ = run_cli(capsys, "stats", "600-cell", "--json")
        assert out1 == out2


class TestProject:
    def test_csv_vertex8(self, capsys, cx_tesseract):
        code, out, _ = run_cli(capsys, "project", "tesseract", "--format", "csv")
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 17
        assert rows[8] == "8,0.0000000000,-1.4142135624"

    def test_svg_file(self, capsys, tmp_path, cx_tesseract):
        out_path = tmp_path / "t.svg"
        code, _, _ = run_cli(capsys, "project", "tesseract",
                             "--format", "svg", "--out", str(out_path))
        assert code == 0
        svg = out_path.read_text()
        assert svg.count("<line ") == 32

    def test_png_requires_out(self, capsys, cx_tesseract):
        code, _, err = run_cli(capsys, "project", "tesseract", "--format", "png")
        assert code == 1
        assert "--out" in err

    def test_png_file(self, capsys, tmp_path, cx_tesseract):
        out_path = tmp_path / "t.png"
        code, _, _ = run_cli(capsys, "project", "tesseract",
                             "--format", "png", "--out", str(out_path))
        assert code == 0
        assert out_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_svg_deterministic(self, capsys, cx600):
        _, out1, _ = run_cli(capsys, "project", "600-cell", "--format", "svg")
        _, out2, _ = run_cli(capsys, "project", "600-cell", "--format", "svg")
        assert out1 == out2


class TestPole:
    def test_600cell(self, capsys, cx600):
        code, out, _ = run_cli(capsys, "pole", "600-cell")
        assert code == 0
        assert out.count("13200") == 2
        assert "equals" in out

    def test_120cell(self, capsys, cx120):
        code, out, _ = run_cli(capsys, "pole", "120-cell")
        assert code == 0
        assert out.count("14160") == 2
        assert "7200" in out

    def test_name_normalization(self, capsys, cx600):
        code, out, _ = run_cli(capsys, "pole", "600CELL")
        assert code == 0
        assert "equals" in out


class TestGenerateValidate:
    def test_self_round_trip(self, capsys, tmp_path, cx600):
        vpath = tmp_path / "v.csv"
        code, _, _ = run_cli(capsys, "generate", "600-cell", "--out", str(vpath))
        assert code == 0
        jpath = tmp_path / "j.csv"
        from polychora import incidence
        jpath.write_text(tables.write_joints_csv(
            incidence.adjacency_lists(cx600)))
        report_path = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "validate", "--vertices", str(vpath),
                               "--joints", str(jpath), "--canonical", "600-cell",
                               "--report", str(report_path), "--strict")
        assert code == 0
        assert "spectrum match fraction: 1.0000000000" in out
        report = tables.ValidationReport.from_dict(
            json.loads(report_path.read_text()))
        assert not report.has_findings

    def test_bundled_tables_strict_exit_2(self, capsys):
        code, out, _ = run_cli(
            capsys, "validate",
            "--vertices", str(tables.bundled_path("120cell_vertices")),
            "--joints", str(tables.bundled_path("120cell_joints")),
            "--canonical", "120-cell", "--strict")
        assert code == 2
        assert "(326,327)" in out
        assert "(551,552)" in out

    def test_unit_edge_generate(self, capsys, tmp_path):
        vpath = tmp_path / "u.csv"
        code, _, _ = run_cli(capsys, "generate", "600-cell", "--unit-edge",
                             "--exact", "--out", str(vpath))
        assert code == 0
        assert "sqrt5" in vpath.read_text().splitlines()[1]


class TestSolve:
    def test_recovers_vertex(self, capsys, tmp_path, cx600):
        import numpy as np
        from polychora.incidence import adjacency_lists
        coords = np.array([v.to_floats() for v in cx600.polytope.vertices])
        adj = adjacency_lists(cx600)
        t = 5
        d = np.linalg.norm(coords - coords[t], axis=1)
        shell_values = np.sort(np.unique(np.round(d, 9)))
        b = float(shell_values[2])
        far = int(np.flatnonzero(np.abs(d - b) < 1e-6)[0])
        centers_path = tmp_path / "centers.csv"
        rows = ["index,x1,x2,x3,x4"]
        for k, idx in enumerate(list(adj[t][:3]) + [far], start=1):
            rows.append(f"{k}," + ",".join(f"{x:.12f}" for x in coords[idx]))
        centers_path.write_text("\n".join(rows) + "\n")
        a = float(np.linalg.norm(coords[t] - coords[adj[t][0]]))
        code, out, _ = run_cli(capsys, "solve", "--centers", str(centers_path),
                               "--a", f"{a:.12f}", "--b", f"{b:.12f}")
        assert code == 0
        lines = out.strip().splitlines()
        assert 1 <= len(lines) <= 2
        roots = [tuple(float(x) for x in line.split(",")) for line in lines]
        best = min(max(abs(r[k] - coords[t][k]) for k in range(4))
                   for r in roots)
        assert best < 1e-6

    def test_degenerate_exit_1(self, capsys, tmp_path):
        centers_path = tmp_path / "collinear.csv"
        centers_path.write_text(
            "0,0,0,0\n1,0,0,0\n2,0,0,0\n3,0,0,0\n")
        code, _, err = run_cli(capsys, "solve", "--centers", str(centers_path),
                               "--a", "1.0", "--b", "2.0")
        assert code == 1
        assert "rank" in err or "dependent" in err


class TestErrors:
    def test_unknown_command(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1
        assert err

    def test_unknown_polytope(self, capsys):
        code, _, err = run_cli(capsys, "stats", "circle")
        assert code == 1
        assert "supported" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "validate", "--vertices", "/nope.csv",
                               "--joints", "/nope2.csv")
        assert code == 1
        assert "nope" in err
