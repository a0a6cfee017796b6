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
Residual bounds, candidate outliers and the false alert (FAS) filter.

Residuals against the trend replica are bucketed like the series. Each bucket's bound blends its local standard
deviation with the global one: `alpha * sd_local + (1 - alpha) * sd_global`. A residual further than
`bound_multiplier` bounds from its bucket mean is a candidate. The same bands are computed on the raw signal, and a
bucket keeps its candidates only while `log10(signal bound / residual bound)` stays at or below the filter threshold;
above it the residuals are too weak next to the signal for their outliers to matter.
"""
from logging import getLogger
from math import log10

import numpy as np

from pytsanomaly.constants import Constants
from pytsanomaly.model.anomaly_report import AnomalyReport
from pytsanomaly.model.bands import Band, BandSet
from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import InvalidConfiguration, LengthMismatch, SeriesTooShort
from pytsanomaly.periodicity import detect_periodicity
from pytsanomaly.trend import build_trend, plan_buckets

logger = getLogger(__name__)

MIN_DETECT_OFFLINE_LENGTH = Constants.MIN_SERIES_LENGTH


def residuals(series, trend):
    """
    Subtract the trend replica from the series.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The observed series.

    :type trend: :py:class:`pytsanomaly.model.buckets.TrendReplica`
    :param trend: The trend replica.

    :rtype: :py:class:`numpy.ndarray`
    :return: `series - trend`, element by element.

    :raises LengthMismatch: If the lengths differ.
    """
    if len(series) != len(trend):
        raise LengthMismatch(len(series), len(trend))
    return series.values - trend.values


def band_set(values, plan, alpha):
    """
    Compute per-bucket means, population standard deviations and blended bounds.

    :type values: :py:class:`numpy.ndarray`
    :param values: One value per index of the plan.

    :type plan: :py:class:`pytsanomaly.model.buckets.BucketPlan`
    :param plan: The buckets.

    :type alpha: float
    :param alpha: Weight of the local deviation, in [0, 1].

    :rtype: :py:class:`pytsanomaly.model.bands.BandSet`
    :return: One band per bucket and the global deviation.

    :raises LengthMismatch: If `values` does not cover the plan.
    :raises InvalidConfiguration: If `alpha` is outside [0, 1].
    """
    values = np.asarray(values, dtype=float)
    if len(values) != plan.series_length:
        raise LengthMismatch(len(values), plan.series_length)
    if not 0.0 <= alpha <= 1.0:
        raise InvalidConfiguration('alpha must lie in [0, 1], got {}.'.format(alpha))
    sd_global = float(np.std(values))
    bands = []
    for bucket in plan.buckets:
        chunk = values[bucket.start:bucket.end]
        sd_local = float(np.std(chunk))
        bands.append(Band(float(np.mean(chunk)), sd_local, alpha * sd_local + (1.0 - alpha) * sd_global))
    return BandSet(tuple(bands), sd_global, alpha)


def candidate_outliers(residual_values, residual_bands, plan, multiplier, sd_epsilon=DetectorConfig.sd_epsilon):
    """
    Flag every index whose residual lies strictly beyond `multiplier` bounds from its bucket mean.

    Deviations up to `sd_epsilon` are rounding noise and never flagged.

    :type residual_values: :py:class:`numpy.ndarray`
    :param residual_values: Residuals, one per index.

    :type residual_bands: :py:class:`pytsanomaly.model.bands.BandSet`
    :param residual_bands: Bands of the residuals over `plan`.

    :type plan: :py:class:`pytsanomaly.model.buckets.BucketPlan`
    :param plan: The buckets.

    :type multiplier: float
    :param multiplier: Threshold in units of the bound.

    :type sd_epsilon: float
    :param sd_epsilon: Deviation treated as zero.

    :rtype: frozenset
    :return: Flagged indices.
    """
    residual_values = np.asarray(residual_values, dtype=float)
    flagged = []
    for bucket, band in zip(plan.buckets, residual_bands.per_bucket):
        deviation = np.abs(residual_values[bucket.start:bucket.end] - band.mean)
        outside = (deviation > multiplier * band.bound) & (deviation > sd_epsilon)
        flagged.extend((bucket.start + np.flatnonzero(outside)).tolist())
    return frozenset(flagged)


def fas_values(signal_bands, residual_bands, config):
    """
    Compute the false alert score of each bucket, `log10(signal bound / residual bound)`.

    A bucket whose residual bound is below `sd_epsilon` scores the largest finite float, so its candidates are always
    dropped; if the signal bound is below `sd_epsilon` as well the score is 0.

    :type signal_bands: :py:class:`pytsanomaly.model.bands.BandSet`
    :param signal_bands: Bands of the raw series.

    :type residual_bands: :py:class:`pytsanomaly.model.bands.BandSet`
    :param residual_bands: Bands of the residuals over the same plan.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Supplies `sd_epsilon`.

    :rtype: tuple
    :return: One score per bucket.

    :raises LengthMismatch: If the band sets cover different numbers of buckets.
    """
    if len(signal_bands) != len(residual_bands):
        raise LengthMismatch(len(signal_bands), len(residual_bands))
    scores = []
    for signal, residual in zip(signal_bands.per_bucket, residual_bands.per_bucket):
        if residual.bound < config.sd_epsilon:
            scores.append(0.0 if signal.bound < config.sd_epsilon else Constants.FAS_SENTINEL)
        elif signal.bound < config.sd_epsilon:
            # Signal flat but residuals not: residuals dominate, keep the candidates.
            scores.append(-Constants.FAS_SENTINEL)
        else:
            scores.append(log10(signal.bound / residual.bound))
    return tuple(scores)


def apply_fas_filter(candidates, plan, fas, threshold):
    """
    Keep the candidates of buckets whose false alert score is at most `threshold`.

    :type candidates: frozenset
    :param candidates: Candidate indices.

    :type plan: :py:class:`pytsanomaly.model.buckets.BucketPlan`
    :param plan: The buckets.

    :type fas: tuple
    :param fas: One score per bucket.

    :type threshold: float
    :param threshold: Largest score that keeps a bucket's candidates.

    :rtype: frozenset
    :return: The surviving indices.
    """
    return frozenset(index for index in candidates if fas[plan.bucket_of(index)] <= threshold)


def detect_with_period(series, period, config, optimized):
    """
    Run the pipeline after periodicity detection: plan, trend, residual bands, candidates, signal bands, filter.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to analyse.

    :type period: int
    :param period: Period to plan with, or None for an aperiodic plan.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :type optimized: bool
    :param optimized: Use the optimized aperiodic plan.

    :rtype: :py:class:`pytsanomaly.model.anomaly_report.AnomalyReport`
    :return: The report.

    :raises SeriesTooShort: If the series has fewer than three samples.
    """
    if len(series) < MIN_DETECT_OFFLINE_LENGTH:
        raise SeriesTooShort(len(series), MIN_DETECT_OFFLINE_LENGTH)
    plan = plan_buckets(len(series), period, optimized, config)
    trend = build_trend(series, plan, config)
    residual_values = residuals(series, trend)
    residual_bands = band_set(residual_values, plan, config.alpha)
    candidates = candidate_outliers(residual_values, residual_bands, plan, config.bound_multiplier,
                                    config.sd_epsilon)
    signal_bands = band_set(series.values, plan, config.alpha)
    fas = fas_values(signal_bands, residual_bands, config)
    anomalies = apply_fas_filter(candidates, plan, fas, config.fas_threshold)
    logger.debug('{} bucket(s), {} candidate(s), {} anomaly(ies).'.format(len(plan), len(candidates), len(anomalies)))
    return AnomalyReport(candidates, anomalies, fas, residual_bands, signal_bands, period, plan)


def detect_offline(series, config, optimized=False, period=None):
    """
    Detect anomalies in a whole series at once.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to analyse; at least three samples.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :type optimized: bool
    :param optimized: Use the optimized aperiodic plan.

    :type period: int
    :param period: Period to use instead of detecting one.

    :rtype: :py:class:`pytsanomaly.model.anomaly_report.AnomalyReport`
    :return: The report.

    :raises SeriesTooShort: If the series has fewer than three samples.
    """
    if len(series) < MIN_DETECT_OFFLINE_LENGTH:
        raise SeriesTooShort(len(series), MIN_DETECT_OFFLINE_LENGTH)
    if period is None:
        period = detect_periodicity(series, config)
        logger.info('Detected period: {}.'.format(period))
    return detect_with_period(series, period, config, optimized)
