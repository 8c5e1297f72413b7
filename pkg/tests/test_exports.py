import csv
import json
import re

import pytest

from hfdf_assign import Frontier, sweep
from hfdf_assign.exports import (
    emit_plot,
    plot_extent,
    to_pixel,
    write_frontier_csv,
    write_frontier_json,
)


@pytest.fixture()
def toy_frontier(toy):
    scenario, c = toy
    return sweep(scenario, c, range(7))


class TestCsv:
    def test_layout_and_parse_back(self, tmp_path, toy_frontier):
        path = tmp_path / "frontier.csv"
        write_frontier_csv(toy_frontier, path)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        header, data = rows[0], rows[1:]
        assert header[:3] == ["budget", "f1", "f2"]
        assert header[3:18] == [f"x_{j}_{k}" for j in range(5) for k in range(3)]
        assert header[18:] == ["y_0", "y_1", "y_2"]
        assert len(data) == 7
        for row, point in zip(data, toy_frontier.points):
            assert int(row[0]) == point.budget
            assert float(row[1]) == round(point.f1, 6)
            assert int(row[2]) == point.f2

    def test_lf_line_endings(self, tmp_path, toy_frontier):
        path = tmp_path / "frontier.csv"
        write_frontier_csv(toy_frontier, path)
        blob = path.read_bytes()
        assert b"\r" not in blob
        assert blob.endswith(b"\n")

    def test_byte_identical_runs(self, tmp_path, toy_frontier):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        write_frontier_csv(toy_frontier, a)
        write_frontier_csv(toy_frontier, b)
        assert a.read_bytes() == b.read_bytes()

    def test_empty_frontier_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="empty frontier"):
            write_frontier_csv(Frontier(()), tmp_path / "x.csv")


class TestJson:
    def test_structure(self, tmp_path, toy_frontier):
        path = tmp_path / "frontier.json"
        write_frontier_json(toy_frontier, path)
        records = json.loads(path.read_text())
        assert len(records) == 7
        first = records[0]
        assert set(first) == {"budget", "f1", "f2", "x", "y"}
        assert first["budget"] == 0
        assert first["f1"] == toy_frontier.points[0].f1
        assert len(first["x"]) == 5 and len(first["x"][0]) == 3
        assert first["y"] == [0, 0, 0]

    def test_byte_identical_runs(self, tmp_path, toy_frontier):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        write_frontier_json(toy_frontier, a)
        write_frontier_json(toy_frontier, b)
        assert a.read_bytes() == b.read_bytes()


def circle_centers(svg_text):
    return [
        (float(m.group(1)), float(m.group(2)))
        for m in re.finditer(r'<circle cx="([-\d.]+)" cy="([-\d.]+)"', svg_text)
    ]


class TestSvg:
    def test_toy_plot_markers(self, tmp_path, toy_frontier):
        path = tmp_path / "frontier.svg"
        emit_plot(toy_frontier, path)
        text = path.read_text()
        centers = circle_centers(text)
        assert len(centers) == 7
        assert "<polyline" in text
        assert "f2 (negated excess coverage)" in text
        assert "f1 (expected accurate LOBs)" in text
        # Markers are emitted in ascending f2 order; the best-f1 point sits at
        # the most negative f2, i.e. first and highest (smallest cy).
        assert centers[0][1] == min(cy for _, cy in centers)

    def test_affine_transform_recomputed(self, tmp_path, toy_frontier):
        path = tmp_path / "frontier.svg"
        emit_plot(toy_frontier, path)
        centers = circle_centers(path.read_text())
        extent = plot_extent(toy_frontier)
        ordered = sorted(toy_frontier.points, key=lambda p: p.f2)
        for (cx, cy), point in zip(centers, ordered):
            px, py = to_pixel(point.f2, point.f1, extent)
            assert cx == pytest.approx(px, abs=0.005)
            assert cy == pytest.approx(py, abs=0.005)

    def test_extent_spans_f1_range(self, toy_frontier):
        x_lo, x_hi, y_lo, y_hi = plot_extent(toy_frontier)
        assert (x_lo, x_hi) == (-6.0, 0.0)
        assert y_lo == min(p.f1 for p in toy_frontier.points)
        assert y_hi == max(p.f1 for p in toy_frontier.points)

    def test_single_point_has_no_polyline(self, tmp_path, toy):
        scenario, c = toy
        front = sweep(scenario, c, [0])
        path = tmp_path / "single.svg"
        emit_plot(front, path)
        text = path.read_text()
        assert len(circle_centers(text)) == 1
        assert "<polyline" not in text

    def test_empty_frontier_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="empty frontier"):
            emit_plot(Frontier(()), tmp_path / "x.svg")

    def test_byte_identical_runs(self, tmp_path, toy_frontier):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        emit_plot(toy_frontier, a)
        emit_plot(toy_frontier, b)
        assert a.read_bytes() == b.read_bytes()
