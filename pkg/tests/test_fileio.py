"""Point-cloud CSV parsing, serialization, and atomic writes."""

from __future__ import annotations

import numpy as np
import pytest

from dimest import InputError, PointCloud, load_points_csv, save_points_csv
from dimest.fileio import atomic_write_text, points_to_csv


def test_round_trip_is_bit_exact(tmp_path):
    rng = np.random.default_rng(0)
    cloud = PointCloud(rng.normal(size=(100, 3)) * 1e-7)
    path = tmp_path / "pts.csv"
    save_points_csv(cloud, path)
    back = load_points_csv(path)
    assert np.array_equal(back.points, cloud.points)


def test_comments_are_written_and_skipped(tmp_path):
    cloud = PointCloud(np.array([[1.0, 2.0]]))
    path = tmp_path / "pts.csv"
    save_points_csv(cloud, path, comments=["generated for a test"])
    text = path.read_text()
    assert text.startswith("# generated for a test\n")
    assert len(load_points_csv(path)) == 1


def test_blank_lines_skipped(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("# header\n\n1.0,2.0\n\n3.0,4.0\n")
    cloud = load_points_csv(path)
    assert np.array_equal(cloud.points, [[1.0, 2.0], [3.0, 4.0]])


def test_parse_error_reports_line_number(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("1.0,2.0\n1.0,oops\n")
    with pytest.raises(InputError, match="line 2"):
        load_points_csv(path)


def test_inconsistent_width_reports_line_number(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("1.0,2.0\n3.0\n")
    with pytest.raises(InputError, match="line 2"):
        load_points_csv(path)


def test_non_finite_rejected(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("1.0,nan\n")
    with pytest.raises(InputError, match="line 1"):
        load_points_csv(path)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_points_csv(tmp_path / "absent.csv")


def test_empty_file_errors(tmp_path):
    path = tmp_path / "pts.csv"
    path.write_text("# nothing here\n")
    with pytest.raises(InputError, match="no points"):
        load_points_csv(path)


def test_atomic_write_replaces_existing(tmp_path):
    path = tmp_path / "out.txt"
    path.write_text("old")
    atomic_write_text(path, "new")
    assert path.read_text() == "new"
    # No stray temp files left behind.
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]


def test_serialization_full_precision():
    value = 0.1 + 0.2  # not representable prettily
    cloud = PointCloud(np.array([[value]]))
    text = points_to_csv(cloud)
    assert text == f"{value!r}\n"
