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
from dataclasses import replace
from unittest import TestCase

import numpy as np
import pytest

from pytsanomaly.model.bands import Band
from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import NonFiniteSample
from pytsanomaly.model.time_series import TimeSeries
from pytsanomaly.streaming import new_stream_state, push, REASON_ALWAYS, REASON_BOUND_VIOLATION, \
    REASON_FIRST_RUN, REASON_WARMING_UP, REASON_WITHIN_BOUNDS, replay, should_run
from pytsanomaly.synthetic_data import gen_breakout, gen_hetero_sine


def with_band(band):
    return replace(new_stream_state(), last_signal_band=band)


@pytest.mark.usefixtures("config_variables")
class TestShouldRun(TestCase):

    def setUp(self):
        self.config = DetectorConfig()
        self.state = with_band(Band(0.0, 1.0, 1.0))

    def test_fresh_state_runs(self):
        self.assertTrue(should_run(new_stream_state(), 0.0, self.config))

    def test_inside_bounds(self):
        self.assertFalse(should_run(self.state, 1.5, self.config))

    def test_outside_bounds(self):
        self.assertTrue(should_run(self.state, 2.5, self.config))
        self.assertTrue(should_run(self.state, -2.5, self.config))

    def test_boundary_is_inside(self):
        self.assertFalse(should_run(self.state, 2.0, self.config))


@pytest.mark.usefixtures("config_variables")
class TestPush(TestCase):

    def setUp(self):
        self.config = DetectorConfig()

    def test_warming_up(self):
        state, decision = push(new_stream_state(), 1.0, self.config)
        self.assertFalse(decision.ran)
        self.assertFalse(decision.is_anomaly)
        self.assertEqual(REASON_WARMING_UP, decision.reason)
        self.assertEqual(1, len(state.buffer))
        self.assertEqual(0, state.runs_executed)

    def test_first_run_at_min_detect_length(self):
        state = new_stream_state()
        rng = np.random.default_rng(0)
        for sample in rng.normal(size=19).tolist():
            state, decision = push(state, sample, self.config)
            self.assertTrue(decision.skipped)
        state, decision = push(state, 0.1, self.config)
        self.assertTrue(decision.ran)
        self.assertEqual(REASON_FIRST_RUN, decision.reason)
        self.assertEqual(19, decision.index)
        self.assertEqual(1, state.runs_executed)
        self.assertIsNotNone(state.last_signal_band)
        self.assertIsNotNone(state.last_report)

    def test_skipped_sample_grows_buffer_by_one(self):
        state = new_stream_state()
        for _ in range(20):
            state, _ = push(state, 5.0, self.config)
        state, decision = push(state, 5.0, self.config)
        self.assertEqual(REASON_WITHIN_BOUNDS, decision.reason)
        self.assertEqual(21, len(state.buffer))
        self.assertEqual(1, state.runs_executed)

    def test_bound_violation_runs(self):
        state = new_stream_state()
        for _ in range(20):
            state, _ = push(state, 5.0, self.config)
        state, decision = push(state, 50.0, self.config)
        self.assertTrue(decision.ran)
        self.assertEqual(REASON_BOUND_VIOLATION, decision.reason)
        self.assertEqual(2, state.runs_executed)

    def test_every_push_runs_without_optimization(self):
        config = self.config.replace(optimize_runs=False)
        state = new_stream_state()
        for _ in range(25):
            state, decision = push(state, 5.0, config)
        self.assertEqual(REASON_ALWAYS, decision.reason)
        self.assertEqual(6, state.runs_executed)

    def test_rejects_non_finite(self):
        with self.assertRaises(NonFiniteSample):
            push(new_stream_state(), float('nan'), self.config)

    def test_max_buffer_keeps_absolute_indices(self):
        config = self.config.replace(max_buffer=30)
        state = new_stream_state()
        for sample in np.random.default_rng(1).normal(size=50).tolist():
            state, decision = push(state, sample, config)
        self.assertEqual(30, len(state.buffer))
        self.assertEqual(20, state.buffer.origin_index)
        self.assertEqual(49, decision.index)
        self.assertEqual(50, state.samples_seen)


@pytest.mark.usefixtures("config_variables")
class TestReplay(TestCase):

    def setUp(self):
        self.config = DetectorConfig()

    def test_short_series_never_runs(self):
        decisions, state, runs = replay(TimeSeries([1.0, 2.0, 3.0, 4.0, 5.0]), self.config, True)
        self.assertEqual(0, runs)
        self.assertFalse(any(decision.is_anomaly for decision in decisions))
        self.assertEqual(5, state.samples_seen)

    def test_unoptimized_runs_every_push_past_warm_up(self):
        series = TimeSeries(np.random.default_rng(2).normal(size=40))
        _, _, runs = replay(series, self.config, False)
        self.assertEqual(21, runs)

    def test_constant_series_skips_after_first_run(self):
        decisions, _, runs = replay(TimeSeries([5.0] * 100), self.config, True)
        self.assertEqual(1, runs)
        self.assertTrue(all(decision.reason == REASON_WITHIN_BOUNDS for decision in decisions[20:]))

    def test_buffer_equals_input(self):
        series = gen_breakout(n=120, break_index=60).series
        _, state, _ = replay(series, self.config, True)
        np.testing.assert_array_equal(series.values, state.buffer.values)

    def test_deterministic(self):
        series = gen_breakout(n=150, break_index=90).series
        first, _, _ = replay(series, self.config, True)
        second, _, _ = replay(series, self.config, True)
        self.assertEqual(first, second)

    def test_skipped_samples_are_within_bounds(self):
        for seed in range(self.seed_count):
            series = TimeSeries(np.random.default_rng(seed).normal(size=120))
            decisions, state, _ = replay(series, self.config, True)
            for decision in decisions:
                if decision.reason == REASON_WITHIN_BOUNDS:
                    self.assertLessEqual(decision.trigger_deviation, decision.trigger_limit)
                    self.assertFalse(decision.is_anomaly)
                if decision.is_anomaly:
                    self.assertTrue(decision.ran)
            self.assertLessEqual(state.runs_executed, state.samples_seen)

    def test_optimization_never_adds_runs(self):
        for seed in range(self.seed_count):
            series = TimeSeries(np.random.default_rng(seed).normal(size=80))
            _, _, optimized = replay(series, self.config, True)
            _, _, unoptimized = replay(series, self.config, False)
            self.assertLessEqual(optimized, unoptimized)

    def test_breakout_flagged_on_arrival(self):
        series = gen_breakout().series
        decisions, _, runs = replay(series, self.config, True)
        flagged = [decision.index for decision in decisions if decision.is_anomaly]
        self.assertTrue(any(abs(index - 250) <= 1 for index in flagged))
        self.assertLessEqual(len([index for index in flagged if abs(index - 250) > 1]), 0.02 * len(series))
        self.assertLessEqual(runs, 0.7 * (len(series) - self.config.min_detect_length + 1))

    def test_breakout_verdicts_agree_with_unoptimized_replay(self):
        series = gen_breakout().series
        optimized, _, _ = replay(series, self.config, True)
        unoptimized, _, _ = replay(series, self.config, False)
        self.assertEqual(optimized[250].is_anomaly, unoptimized[250].is_anomaly)
        self.assertTrue(optimized[250].ran)

    def test_smallest_min_detect_length(self):
        decisions, state, runs = replay(TimeSeries([1.0, 2.0, 3.0, 4.0]), self.config.replace(min_detect_length=3),
                                        False)
        self.assertEqual(2, runs)
        self.assertEqual([False, False, True, True], [decision.ran for decision in decisions])
        self.assertEqual(4, state.samples_seen)

    def test_heteroskedastic_sine_rarely_alarms(self):
        quiet = 0
        for seed in range(10):
            series = gen_hetero_sine(seed=seed).series
            decisions, state, _ = replay(series, self.config, True)
            false_alarms = sum(decision.is_anomaly for decision in decisions)
            quiet += false_alarms <= 0.02 * len(series) and state.period_cache.confirmed_period == 28
        self.assertGreaterEqual(quiet, 9)
