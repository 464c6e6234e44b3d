"""Sampling determinism, domain membership, and the extension property."""

import numpy as np
import pytest

from poiscompat.scalarfield import Point3, SampleSpec, sample_points


class TestPoint3:
    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Point3(float("inf"), 0.0, 0.0)
        with pytest.raises(ValueError):
            Point3(0.0, float("nan"), 0.0)

    def test_tuple_view(self):
        assert Point3(1.0, 2.0, 3.0).as_tuple() == (1.0, 2.0, 3.0)


class TestSampleSpec:
    def test_defaults(self):
        s = SampleSpec()
        assert s.box == (-2.0, 2.0)
        assert s.excluded_radius == 0.25
        assert s.count == 500
        assert s.seed == 42

    @pytest.mark.parametrize("kwargs", [
        {"box": (2.0, -2.0)},
        {"box": (1.0, 1.0)},
        {"count": 0},
        {"abs_tol": 0.0},
        {"rel_tol": -1.0},
        {"excluded_radius": -0.1},
    ])
    def test_invalid_specs_rejected(self, kwargs):
        with pytest.raises(ValueError):
            SampleSpec(**kwargs)


class TestSampling:
    def test_points_in_box_outside_ball(self):
        spec = SampleSpec(box=(-1.5, 1.5), excluded_radius=0.5, count=1000, seed=7)
        pts = sample_points(spec)
        assert pts.shape == (1000, 3)
        assert np.all(pts >= -1.5) and np.all(pts <= 1.5)
        assert np.all(np.sum(pts**2, axis=1) > 0.5**2)

    def test_deterministic(self):
        spec = SampleSpec(seed=11)
        assert np.array_equal(sample_points(spec), sample_points(spec))

    def test_count_extension_is_prefix(self):
        small = sample_points(SampleSpec(count=100, seed=5))
        large = sample_points(SampleSpec(count=300, seed=5))
        assert np.array_equal(large[:100], small)

    def test_seed_changes_points(self):
        a = sample_points(SampleSpec(seed=1, count=50))
        b = sample_points(SampleSpec(seed=2, count=50))
        assert not np.array_equal(a, b)

    def test_ball_covering_box_rejected(self):
        spec = SampleSpec(box=(-0.1, 0.1), excluded_radius=10.0, count=5)
        with pytest.raises(ValueError):
            sample_points(spec)
