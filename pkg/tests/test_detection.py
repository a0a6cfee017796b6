# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You may not use this file except in compliance with
# the License. A copy of the License is located at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific language governing permissions
# and limitations under the License.
from math import fsum, sqrt
from unittest import TestCase

import numpy as np
import pytest

from pytsanomaly.constants import Constants
from pytsanomaly.detection import apply_fas_filter, band_set, candidate_outliers, detect_offline, \
    detect_with_period, fas_values, residuals
from pytsanomaly.model.bands import Band, BandSet
from pytsanomaly.model.buckets import Bucket, BucketPlan, TrendReplica
from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import InvalidConfiguration, LengthMismatch, SeriesTooShort
from pytsanomaly.model.time_series import TimeSeries
from pytsanomaly.synthetic_data import gen_breakout, gen_hetero_sine
from pytsanomaly.trend import plan_buckets


def single_bucket(n):
    return BucketPlan((Bucket(0, n, 1),), n, n)


def noisy_series(seed, n=300):
    rng = np.random.default_rng(seed)
    values = rng.normal(0.0, 1.0, n)
    values[rng.integers(0, n, 3)] += 8.0
    return values


@pytest.mark.usefixtures("config_variables")
class TestResidualsAndBands(TestCase):

    def test_residuals(self):
        series = TimeSeries([1.0, 2.0, 4.0])
        trend = TrendReplica([1.0, 1.5, 3.0])
        self.assertEqual([0.0, 0.5, 1.0], residuals(series, trend).tolist())

    def test_band_set_matches_brute_force_on_random_plans(self):
        rng = np.random.default_rng(11)
        config = DetectorConfig()
        for _ in range(100):
            n = int(rng.integers(20, 400))
            period = None if rng.random() < 0.5 else int(rng.integers(2, n // 3 + 1))
            plan = plan_buckets(n, period, bool(rng.random() < 0.5), config)
            values = rng.normal(rng.normal(0.0, 10.0), rng.uniform(0.1, 10.0), n)
            alpha = float(rng.random())
            bands = band_set(values, plan, alpha)
            sd_global = sqrt(fsum((value - fsum(values) / n) ** 2 for value in values) / n)
            np.testing.assert_allclose(bands.sd_global, sd_global, rtol=1e-12)
            for bucket, band in zip(plan.buckets, bands.per_bucket):
                chunk = values[bucket.start:bucket.end].tolist()
                mean = fsum(chunk) / len(chunk)
                sd_local = sqrt(fsum((value - mean) ** 2 for value in chunk) / len(chunk))
                np.testing.assert_allclose(band.mean, mean, rtol=1e-12, atol=1e-12)
                np.testing.assert_allclose(band.sd_local, sd_local, rtol=1e-12)
                np.testing.assert_allclose(band.bound, alpha * sd_local + (1.0 - alpha) * sd_global, rtol=1e-12)

    def test_residuals_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            residuals(TimeSeries([1.0, 2.0]), TrendReplica([1.0]))

    def test_band_set_matches_brute_force(self):
        values = np.random.default_rng(5).normal(size=37)
        plan = BucketPlan((Bucket(0, 10, 1), Bucket(10, 20, 1), Bucket(20, 37, 1)), 37, 10)
        bands = band_set(values, plan, 0.3)
        sd_global = np.sqrt(np.mean((values - values.mean()) ** 2))
        self.assertAlmostEqual(sd_global, bands.sd_global, places=12)
        for bucket, band in zip(plan.buckets, bands.per_bucket):
            chunk = values[bucket.start:bucket.end]
            sd_local = np.sqrt(np.mean((chunk - chunk.mean()) ** 2))
            self.assertAlmostEqual(chunk.mean(), band.mean, places=12)
            self.assertAlmostEqual(sd_local, band.sd_local, places=12)
            self.assertAlmostEqual(0.3 * sd_local + 0.7 * sd_global, band.bound, places=12)

    def test_band_set_alpha_extremes(self):
        values = np.random.default_rng(6).normal(size=20)
        plan = BucketPlan((Bucket(0, 10, 1), Bucket(10, 20, 1)), 20, 10)
        local = band_set(values, plan, 1.0)
        global_only = band_set(values, plan, 0.0)
        self.assertEqual([band.sd_local for band in local.per_bucket], local.bounds)
        self.assertTrue(all(bound == global_only.sd_global for bound in global_only.bounds))

    def test_band_set_rejects_bad_alpha(self):
        with self.assertRaises(InvalidConfiguration):
            band_set(np.zeros(5), single_bucket(5), 1.5)

    def test_band_set_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            band_set(np.zeros(4), single_bucket(5), 0.5)


@pytest.mark.usefixtures("config_variables")
class TestCandidatesAndFilter(TestCase):

    def test_deviation_at_threshold_is_not_flagged(self):
        values = np.array([0.0, 0.0, 0.0, 0.0, 10.0])
        plan = single_bucket(5)
        self.assertEqual(frozenset(), candidate_outliers(values, band_set(values, plan, 0.5), plan, 2.0))

    def test_deviation_beyond_threshold_is_flagged(self):
        values = np.array([0.0] * 9 + [10.0])
        plan = single_bucket(10)
        self.assertEqual(frozenset([9]), candidate_outliers(values, band_set(values, plan, 0.5), plan, 2.0))

    def test_constant_residuals_have_no_candidates(self):
        values = np.full(12, 3.0)
        plan = single_bucket(12)
        self.assertEqual(frozenset(), candidate_outliers(values, band_set(values, plan, 0.5), plan, 2.0))

    def test_candidates_use_their_own_bucket(self):
        values = np.array([0.0] * 9 + [10.0] + [0.0] * 10)
        plan = BucketPlan((Bucket(0, 10, 1), Bucket(10, 20, 1)), 20, 10)
        self.assertEqual(frozenset([9]), candidate_outliers(values, band_set(values, plan, 0.5), plan, 2.0))

    def test_fas_values(self):
        config = DetectorConfig()
        signal = BandSet((Band(0.0, 1.0, 10.0), Band(0.0, 1.0, 1.0), Band(0.0, 0.0, 0.0)), 1.0, 0.5)
        residual = BandSet((Band(0.0, 1.0, 1.0), Band(0.0, 0.0, 0.0), Band(0.0, 0.0, 0.0)), 1.0, 0.5)
        fas = fas_values(signal, residual, config)
        self.assertAlmostEqual(1.0, fas[0])
        self.assertEqual(Constants.FAS_SENTINEL, fas[1])
        self.assertEqual(0.0, fas[2])

    def test_fas_length_mismatch(self):
        one = BandSet((Band(0.0, 1.0, 1.0),), 1.0, 0.5)
        two = BandSet((Band(0.0, 1.0, 1.0), Band(0.0, 1.0, 1.0)), 1.0, 0.5)
        with self.assertRaises(LengthMismatch):
            fas_values(one, two, DetectorConfig())

    def test_filter_keeps_buckets_at_or_below_threshold(self):
        plan = BucketPlan((Bucket(0, 10, 1), Bucket(10, 20, 1), Bucket(20, 30, 1)), 30, 10)
        kept = apply_fas_filter(frozenset([3, 15, 25]), plan, (0.5, 1.0, 1.2), 1.0)
        self.assertEqual(frozenset([3, 15]), kept)

    def test_sentinel_bucket_is_dropped(self):
        plan = single_bucket(10)
        self.assertEqual(frozenset(), apply_fas_filter(frozenset([4]), plan, (Constants.FAS_SENTINEL,), 1.0))


@pytest.mark.usefixtures("config_variables")
class TestDetectOffline(TestCase):

    def setUp(self):
        self.config = DetectorConfig()

    def test_breakout(self):
        labeled = gen_breakout()
        report = detect_offline(labeled.series, self.config)
        self.assertEqual(frozenset([250]), report.anomalies)
        self.assertIsNone(report.period_used)
        self.assertEqual(500, report.series_length)

    def test_noiseless_breakout(self):
        labeled = gen_breakout(noise_sd=0.0, level_shift=10.0)
        self.assertEqual(frozenset([250]), detect_offline(labeled.series, self.config).anomalies)

    def test_heteroskedastic_sine_has_no_anomaly(self):
        report = detect_offline(gen_hetero_sine().series, self.config)
        self.assertEqual(frozenset(), report.anomalies)
        self.assertEqual(28, report.period_used)

    def test_breakout_over_seeds(self):
        exact = sum(detect_offline(gen_breakout(seed=seed).series, self.config).anomalies == frozenset([250])
                    for seed in range(10))
        self.assertGreaterEqual(exact, 9)

    def test_heteroskedastic_sine_over_seeds(self):
        quiet = sum(not detect_offline(gen_hetero_sine(seed=seed).series, self.config).anomalies for seed in range(10))
        self.assertGreaterEqual(quiet, 9)

    def test_constant_series_has_no_anomaly(self):
        report = detect_offline(TimeSeries([5.0] * 60), self.config)
        self.assertEqual(frozenset(), report.anomalies)
        self.assertEqual(frozenset(), report.candidates)

    def test_period_override(self):
        report = detect_offline(gen_breakout().series, self.config, period=50)
        self.assertEqual(50, report.period_used)
        self.assertEqual(50, report.plan_used.window_size)

    def test_too_short(self):
        with self.assertRaises(SeriesTooShort):
            detect_offline(TimeSeries([1.0, 2.0]), self.config)

    def test_three_samples(self):
        report = detect_offline(TimeSeries([1.0, 2.0, 3.0]), self.config)
        self.assertEqual(1, len(report.plan_used))

    def test_anomalies_are_candidates(self):
        for seed in range(self.seed_count):
            report = detect_offline(TimeSeries(noisy_series(seed)), self.config)
            self.assertTrue(report.anomalies <= report.candidates)

    def test_unfiltered_view(self):
        series = TimeSeries(noisy_series(0))
        report = detect_offline(series, self.config.replace(fas_threshold=float('inf')))
        self.assertEqual(report.candidates, report.anomalies)

    def test_raising_threshold_never_removes_anomalies(self):
        for seed in range(self.seed_count):
            series = TimeSeries(noisy_series(seed))
            low = detect_offline(series, self.config.replace(fas_threshold=0.2))
            high = detect_offline(series, self.config.replace(fas_threshold=0.8))
            self.assertTrue(low.anomalies <= high.anomalies)

    def test_lowering_multiplier_never_removes_candidates(self):
        for seed in range(self.seed_count):
            series = TimeSeries(noisy_series(seed))
            strict = detect_with_period(series, None, self.config.replace(bound_multiplier=3.0), False)
            loose = detect_with_period(series, None, self.config.replace(bound_multiplier=1.5), False)
            self.assertTrue(strict.candidates <= loose.candidates)

    def test_scale_and_shift_invariance(self):
        for seed in range(self.seed_count):
            values = noisy_series(seed)
            base = detect_offline(TimeSeries(values), self.config)
            moved = detect_offline(TimeSeries(3.0 * values + 100.0), self.config)
            self.assertEqual(base.anomalies, moved.anomalies)

    def test_anomalies_invariant_under_scaling(self):
        values = noisy_series(3)
        base = detect_offline(TimeSeries(values), self.config)
        for scale in (0.1, 1.0, 1000.0):
            scaled = detect_offline(TimeSeries(scale * values), self.config)
            self.assertEqual(base.candidates, scaled.candidates, scale)
            self.assertEqual(base.anomalies, scaled.anomalies, scale)
            np.testing.assert_allclose(scaled.fas_per_bucket, base.fas_per_bucket, rtol=1e-9, atol=1e-9)

    def test_report_shapes(self):
        report = detect_offline(gen_breakout().series, self.config, optimized=True)
        buckets = len(report.plan_used)
        self.assertEqual(buckets, len(report.fas_per_bucket))
        self.assertEqual(buckets, len(report.residual_bands))
        self.assertEqual(buckets, len(report.signal_bands))
        self.assertEqual(report.signal_bands.per_bucket[-1], report.last_signal_band())
