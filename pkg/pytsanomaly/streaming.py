# Copyright 2019 Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: MIT-0
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this
# software and associated documentation files (the "Software"), to deal in the Software
# without restriction, including without limitation the rights to use, copy, modify,
# merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
# INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A
# PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""
Online detection, one sample at a time.

Every pushed sample is appended to the buffer. Detection is re-run over the whole buffer only when the sample leaves
the signal band of the final bucket of the previous run, that is when `|sample - mean| > bound_multiplier * bound`;
a sample inside the band is reported as normal without a run. With `optimize_runs` disabled every push past the
warm-up runs detection.
"""
from dataclasses import dataclass, replace
from logging import getLogger
from typing import Optional

import numpy as np

from pytsanomaly.detection import detect_with_period
from pytsanomaly.model.anomaly_report import AnomalyReport
from pytsanomaly.model.bands import Band
from pytsanomaly.model.errors import NonFiniteSample
from pytsanomaly.model.time_series import TimeSeries
from pytsanomaly.periodicity import PeriodCache, detect_periodicity, update_period_cache

logger = getLogger(__name__)

REASON_WARMING_UP = 'warming_up'
REASON_WITHIN_BOUNDS = 'within_bounds'
REASON_FIRST_RUN = 'first_run'
REASON_BOUND_VIOLATION = 'bound_violation'
REASON_ALWAYS = 'always'


@dataclass(frozen=True)
class StreamDecision:
    """
    What happened to one pushed sample.

    `ran` tells whether detection was executed; a skipped sample is never anomalous. `trigger_deviation` and
    `trigger_limit` record `|sample - mean|` and `bound_multiplier * bound` against the band of the previous run,
    and are None before the first run.
    """
    index: int
    ran: bool
    is_anomaly: bool
    reason: str
    trigger_deviation: Optional[float] = None
    trigger_limit: Optional[float] = None

    @property
    def skipped(self):
        return not self.ran


@dataclass(frozen=True)
class StreamState:
    """
    Everything kept between pushes for one series. Each push returns a new state; a state is never modified.
    """
    buffer: TimeSeries
    period_cache: PeriodCache = PeriodCache()
    last_signal_band: Optional[Band] = None
    runs_executed: int = 0
    samples_seen: int = 0
    last_report: Optional[AnomalyReport] = None


def new_stream_state(origin_index=0):
    """
    Return an empty stream state.

    :type origin_index: int
    :param origin_index: Index given to the first pushed sample.

    :rtype: :py:class:`pytsanomaly.streaming.StreamState`
    :return: A state with an empty buffer and no run.
    """
    return StreamState(TimeSeries(np.empty(0), origin_index))


def _trigger(state, sample, config):
    band = state.last_signal_band
    if band is None:
        return None, None
    return abs(sample - band.mean), config.bound_multiplier * band.bound


def should_run(state, sample, config):
    """
    Decide whether `sample` is a run occasion.

    :type state: :py:class:`pytsanomaly.streaming.StreamState`
    :param state: The state before the sample is pushed.

    :type sample: float
    :param sample: The arriving sample.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Supplies `bound_multiplier`.

    :rtype: bool
    :return: True if no run has executed yet, or if the sample lies strictly outside `bound_multiplier` bounds around
             the mean of the last signal band.
    """
    deviation, limit = _trigger(state, sample, config)
    return deviation is None or deviation > limit


def _run(state, buffer, config):
    detected = detect_periodicity(buffer, config)
    cache = update_period_cache(state.period_cache, detected, config.period_confirmations)
    report = detect_with_period(buffer, cache.confirmed_period, config, optimized=True)
    return cache, report


def push(state, sample, config):
    """
    Push one sample and run detection if it is a run occasion.

    :type state: :py:class:`pytsanomaly.streaming.StreamState`
    :param state: The current state; it is not modified.

    :type sample: float
    :param sample: The arriving sample.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings, `optimize_runs` and `max_buffer` included.

    :rtype: tuple
    :return: The new :py:class:`StreamState` and the :py:class:`StreamDecision` for the sample.

    :raises NonFiniteSample: If `sample` is NaN or infinite.
    """
    if not np.isfinite(sample):
        raise NonFiniteSample(state.buffer.origin_index + len(state.buffer))
    buffer = state.buffer.append(sample)
    if config.max_buffer is not None:
        buffer = buffer.tail(config.max_buffer)
    index = buffer.origin_index + len(buffer) - 1
    seen = state.samples_seen + 1
    deviation, limit = _trigger(state, sample, config)

    if len(buffer) < config.min_detect_length:
        decision = StreamDecision(index, False, False, REASON_WARMING_UP, deviation, limit)
        return replace(state, buffer=buffer, samples_seen=seen), decision

    if not config.optimize_runs:
        reason = REASON_ALWAYS
    elif deviation is None:
        reason = REASON_FIRST_RUN
    elif deviation > limit:
        reason = REASON_BOUND_VIOLATION
    else:
        decision = StreamDecision(index, False, False, REASON_WITHIN_BOUNDS, deviation, limit)
        return replace(state, buffer=buffer, samples_seen=seen), decision

    cache, report = _run(state, buffer, config)
    is_anomaly = len(buffer) - 1 in report.anomalies
    if is_anomaly:
        logger.info('Sample {} is anomalous.'.format(index))
    logger.debug('Run {} at sample {} ({}).'.format(state.runs_executed + 1, index, reason))
    new_state = StreamState(buffer, cache, report.last_signal_band(), state.runs_executed + 1, seen, report)
    return new_state, StreamDecision(index, True, is_anomaly, reason, deviation, limit)


def replay(series, config, optimize):
    """
    Push every sample of a series through a fresh stream state.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to replay.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings; `optimize_runs` is replaced by `optimize`.

    :type optimize: bool
    :param optimize: Skip samples inside the last signal band.

    :rtype: tuple
    :return: The list of :py:class:`StreamDecision` in arrival order, the final :py:class:`StreamState` and the
             number of runs executed.
    """
    config = config.replace(optimize_runs=optimize)
    state = new_stream_state(series.origin_index)
    decisions = []
    for sample in series.values.tolist():
        state, decision = push(state, sample, config)
        decisions.append(decision)
    logger.info('Replayed {} sample(s) with {} run(s), optimization {}.'
                .format(len(series), state.runs_executed, 'on' if optimize else 'off'))
    return decisions, state, state.runs_executed
