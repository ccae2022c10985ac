"""Grid occupancy counting and neighborhood-volume estimation."""

from __future__ import annotations

import math

import numpy as np
import pytest
from dimest import (
    GridSpec,
    InputError,
    PointCloud,
    ScaleSchedule,
    count_boxes,
    count_series,
    ifs_chaos_game,
    loglog_fit,
    sierpinski_spec,
    uniform_segment,
    volume_dimension,
    volume_estimate,
)
from dimest.boxcount import _unique_index_counts


class TestCountBoxes:
    def test_singleton_occupies_one_box(self):
        cloud = PointCloud(np.array([[0.37, -1.2]]))
        for eps in (1.0, 0.25, 2.0**-7):
            count, hist = count_boxes(cloud, GridSpec(np.zeros(2), eps))
            assert count == 1
            assert hist.total == 1

    def test_segment_sixteenths_with_endpoint(self):
        # Independent oracle: direct floor arithmetic over the raw points.
        cloud = uniform_segment(10**5)
        grid = GridSpec(np.zeros(2), 2.0**-4)
        oracle = {
            (math.floor(x * 16), math.floor(y * 16)) for x, y in cloud.points
        }
        count, hist = count_boxes(cloud, grid)
        # [0,1) splits into 16 cells; the endpoint x=1.0 owns a 17th.
        assert count == len(oracle) == 17
        assert hist.occupied == 17

    def test_empty_cloud_rejected(self):
        with pytest.raises(InputError, match="empty point set"):
            count_boxes(PointCloud(np.empty((0, 2))), GridSpec(np.zeros(2), 1.0))

    def test_histogram_mass_conservation(self):
        rng = np.random.default_rng(2)
        cloud = PointCloud(rng.normal(size=(5000, 2)))
        _, hist = count_boxes(cloud, GridSpec(np.zeros(2), 0.3))
        assert int(hist.counts.sum()) == hist.total == 5000
        assert np.all(hist.counts >= 1)

    def test_histogram_indices_sorted_lexicographically(self):
        rng = np.random.default_rng(3)
        cloud = PointCloud(rng.uniform(-2, 2, size=(1000, 2)))
        _, hist = count_boxes(cloud, GridSpec(np.zeros(2), 0.5))
        as_tuples = [tuple(r) for r in hist.indices]
        assert as_tuples == sorted(as_tuples)

    def test_cells_mapping(self):
        cloud = PointCloud(np.array([[0.1, 0.1], [0.2, 0.2], [0.9, 0.9]]))
        _, hist = count_boxes(cloud, GridSpec(np.zeros(2), 0.5))
        assert hist.cells() == {(0, 0): 2, (1, 1): 1}


class TestUniqueIndexCounts:
    def test_matches_numpy_unique_rows(self):
        rng = np.random.default_rng(9)
        idx = rng.integers(-50, 50, size=(2000, 3)).astype(np.int64)
        rows, counts = _unique_index_counts(idx)
        expect_rows, expect_counts = np.unique(idx, axis=0, return_counts=True)
        assert np.array_equal(rows, expect_rows)
        assert np.array_equal(counts, expect_counts)

    def test_wide_span_fallback(self):
        # Spans whose product exceeds the packing capacity use the row path.
        idx = np.array(
            [[0, 0], [2**33, 2**33], [0, 0], [-(2**33), 5]], dtype=np.int64
        )
        rows, counts = _unique_index_counts(idx)
        expect_rows, expect_counts = np.unique(idx, axis=0, return_counts=True)
        assert np.array_equal(rows, expect_rows)
        assert np.array_equal(counts, expect_counts)

    def test_one_dimensional(self):
        idx = np.array([[3], [1], [3], [-2]], dtype=np.int64)
        rows, counts = _unique_index_counts(idx)
        assert np.array_equal(rows[:, 0], [-2, 1, 3])
        assert np.array_equal(counts, [1, 1, 2])


class TestCountSeries:
    def test_singleton_all_ones(self):
        series = count_series(
            PointCloud(np.array([[0.5, 0.5]])), ScaleSchedule.dyadic(1, 5)
        )
        assert np.array_equal(series.counts, np.ones(5, dtype=np.int64))

    def test_entries_ordered_by_k(self):
        cloud = uniform_segment(100)
        series = count_series(cloud, ScaleSchedule.dyadic(2, 4))
        ks = [entry[0] for entry in series.entries]
        assert ks == [2.0, 3.0, 4.0]

    def test_anchor_defaults_to_bbox_min(self):
        rng = np.random.default_rng(4)
        cloud = PointCloud(rng.uniform(5, 6, size=(200, 2)))
        series = count_series(cloud, ScaleSchedule.dyadic(1, 3))
        assert np.array_equal(series.anchor, cloud.points.min(axis=0))

    def test_cantor_lattice_counts_are_exact_powers_of_two(
        self, cantor_series, cantor_schedule
    ):
        counts, _ = cantor_series
        assert np.array_equal(counts.counts, [2**k for k in range(1, 9)])

    def test_cantor_dimension(self, cantor_series):
        counts, _ = cantor_series
        fit = loglog_fit(counts.ks, np.log2(counts.counts))
        assert fit.slope == pytest.approx(math.log(2) / math.log(3), abs=1e-12)

    def test_monotone_refinement_random_clouds(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            n = int(rng.integers(2, 400))
            cloud = PointCloud(rng.uniform(-1, 1, size=(n, 2)))
            series = count_series(cloud, ScaleSchedule.dyadic(0, 6))
            counts = series.counts
            assert np.all(counts[:-1] <= counts[1:])
            assert np.all(counts[1:] <= 4 * counts[:-1])

    def test_anchor_shift_bounded_factor(self):
        # Any anchor shift changes the count by at most 2**d either way.
        rng = np.random.default_rng(8)
        cloud = PointCloud(rng.uniform(0, 1, size=(500, 2)))
        sched = ScaleSchedule.dyadic(2, 5)
        base = count_series(cloud, sched).counts
        for _ in range(5):
            shifted = count_series(cloud, sched, anchor=rng.uniform(-1, 0, 2)).counts
            assert np.all(shifted <= 4 * base)
            assert np.all(base <= 4 * shifted)

    def test_parallel_equals_sequential(self, sierpinski_cloud):
        sched = ScaleSchedule.dyadic(2, 7)
        seq = count_series(sierpinski_cloud, sched, workers=1)
        par = count_series(sierpinski_cloud, sched, workers=4)
        assert np.array_equal(seq.counts, par.counts)
        assert np.array_equal(seq.epsilons, par.epsilons)

    def test_power_of_two_similarity_gives_identical_counts(self):
        cloud = ifs_chaos_game(sierpinski_spec(10**4, rng_seed=3))
        sched = ScaleSchedule.dyadic(2, 6)
        base = count_series(cloud, sched, anchor=np.zeros(2))
        doubled = count_series(
            PointCloud(cloud.points * 2.0),
            ScaleSchedule.from_epsilons(sched.epsilons * 2.0),
            anchor=np.zeros(2),
        )
        assert np.array_equal(base.counts, doubled.counts)

    def test_generic_similarity_preserves_dimension_estimate(self):
        cloud = ifs_chaos_game(sierpinski_spec(10**5, rng_seed=5))
        sched = ScaleSchedule.dyadic(2, 6)
        factor = 0.37
        base = count_series(cloud, sched)
        scaled = count_series(
            PointCloud(cloud.points * factor),
            ScaleSchedule.from_epsilons(sched.epsilons * factor),
        )
        dim_base = loglog_fit(base.ks, np.log2(base.counts)).slope
        dim_scaled = loglog_fit(scaled.ks, np.log2(scaled.counts)).slope
        assert dim_scaled == pytest.approx(dim_base, abs=0.02)


class TestVolumeEstimate:
    def test_singleton_disk_area(self):
        cloud = PointCloud(np.array([[0.3, 0.7]]))
        est = volume_estimate(cloud, 0.1)
        assert est.resolution == pytest.approx(0.025)
        assert est.volume == pytest.approx(math.pi * 0.01, rel=0.15)

    def test_two_distant_points_disjoint_disks(self):
        cloud = PointCloud(np.array([[0.0, 0.0], [5.0, 0.0]]))
        est = volume_estimate(cloud, 0.1)
        assert est.volume == pytest.approx(2 * math.pi * 0.01, rel=0.15)

    def test_segment_stadium_area(self):
        cloud = uniform_segment(10**4)
        eps = 0.05
        est = volume_estimate(cloud, eps)
        stadium = 2 * eps + math.pi * eps**2
        assert est.volume == pytest.approx(stadium, rel=0.15)

    def test_volume_lower_bound_from_occupied_fine_cells(self):
        rng = np.random.default_rng(12)
        cloud = PointCloud(rng.normal(size=(300, 2)))
        eps = 0.2
        est = volume_estimate(cloud, eps)
        lo = cloud.points.min(axis=0) - eps
        fine = GridSpec(anchor=lo, epsilon=est.resolution)
        occupied, _ = count_boxes(cloud, fine)
        assert est.volume >= occupied * est.resolution**2

    def test_dimension_limit(self):
        cloud = PointCloud(np.zeros((1, 4)))
        with pytest.raises(InputError, match="limited to d <= 3"):
            volume_estimate(cloud, 0.1)

    def test_epsilon_validated(self):
        cloud = PointCloud(np.array([[0.0, 0.0]]))
        with pytest.raises(InputError):
            volume_estimate(cloud, 0.0)

    def test_three_dimensional_ball(self):
        cloud = PointCloud(np.zeros((1, 3)))
        est = volume_estimate(cloud, 0.5)
        assert est.volume == pytest.approx(4.0 / 3.0 * math.pi * 0.125, rel=0.15)


class TestVolumeDimension:
    def test_singleton_dimension_zero(self):
        cloud = PointCloud(np.array([[0.2, 0.4]]))
        dim = volume_dimension(cloud, ScaleSchedule.dyadic(2, 5))
        assert abs(dim) < 0.1

    def test_segment_dimension_one(self):
        cloud = uniform_segment(10**4)
        dim = volume_dimension(cloud, ScaleSchedule.dyadic(4, 7))
        assert dim == pytest.approx(1.0, abs=0.1)
