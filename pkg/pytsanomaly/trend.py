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
Bucketed local polynomial trend.

The series is cut into contiguous buckets starting at index 0. A periodic series uses its period as the bucket
width and one extra degree for every `degree_step` points; an aperiodic series uses a fixed linear window, or a
window of a fraction of its length with a quadratic model when optimized. A short final remainder is merged into
the previous bucket. Each bucket gets its own least squares fit, and every break between buckets is smoothed with a
fit of the same width centred on the break, faded in over half a window unless the break separates two levels.
"""
from logging import getLogger
from math import ceil

import numpy as np
from numpy.polynomial import Chebyshev

from pytsanomaly.constants import Constants
from pytsanomaly.model.buckets import Bucket, BucketPlan, TrendReplica
from pytsanomaly.model.errors import LagOutOfRange, LengthMismatch, RankDeficient, SeriesTooShort

logger = getLogger(__name__)

MIN_FALLBACK_LENGTH = Constants.MIN_SERIES_LENGTH
# Guards ceil() against products such as 100 * 0.1 landing a hair above an integer.
FRACTION_TOLERANCE = 1e-9


def degree_for_window(window_size, config):
    """
    Return the polynomial degree for a window: one degree per `degree_step` points, at least 1, at most `max_degree`.

    :type window_size: int
    :param window_size: Number of points in the window; at least 2.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Supplies `degree_step` and `max_degree`.

    :rtype: int
    :return: The degree.
    """
    return min(config.max_degree, max(1, ceil(window_size / config.degree_step)))


def _window_and_degree(series_length, period, optimized, config):
    if period is not None:
        if not 2 <= period < series_length:
            raise LagOutOfRange(period, 2, series_length - 1)
        return period, degree_for_window(period, config)
    if optimized:
        degree = config.optimized_degree
        return max(degree + 2, ceil(series_length * config.optimized_window_fraction - FRACTION_TOLERANCE)), degree
    return config.aperiodic_window, 1


def plan_buckets(series_length, period, optimized, config):
    """
    Cut `[0, series_length)` into buckets.

    :type series_length: int
    :param series_length: Length of the series.

    :type period: int
    :param period: Detected period, or None for an aperiodic series.

    :type optimized: bool
    :param optimized: Use the fixed bucket count for aperiodic series.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :rtype: :py:class:`pytsanomaly.model.buckets.BucketPlan`
    :return: The plan.

    :raises SeriesTooShort: If the series has fewer than three samples and no linear bucket fits.
    :raises LagOutOfRange: If `period` is not in `[2, series_length)`.
    """
    window, degree = _window_and_degree(series_length, period, optimized, config)
    if series_length < degree + 2:
        if series_length < MIN_FALLBACK_LENGTH:
            raise SeriesTooShort(series_length, MIN_FALLBACK_LENGTH)
        return BucketPlan((Bucket(0, series_length, 1),), series_length, series_length)
    if series_length <= window:
        return BucketPlan((Bucket(0, series_length, degree),), series_length, series_length)

    count, remainder = divmod(series_length, window)
    sizes = [window] * count
    if remainder:
        if remainder < max(degree + 2, ceil(window / 2)):
            sizes[-1] += remainder
        else:
            sizes.append(remainder)

    buckets = []
    start = 0
    for size in sizes:
        bucket_degree = degree_for_window(size, config) if period is not None and size != window else degree
        buckets.append(Bucket(start, start + size, bucket_degree))
        start += size
    logger.debug('Planned {} bucket(s) of width {} for {} samples.'.format(len(buckets), window, series_length))
    return BucketPlan(tuple(buckets), series_length, window)


def fit_polynomial(xs, ys, degree):
    """
    Fit a least squares polynomial of `degree`.

    The abscissae are mapped affinely onto [-1, 1] and the fit is expressed in the Chebyshev basis of that interval,
    which keeps degrees up to the cap well conditioned. A rank deficient design drops one degree at a time.

    :type xs: :py:class:`numpy.ndarray`
    :param xs: Distinct abscissae.

    :type ys: :py:class:`numpy.ndarray`
    :param ys: Observations, same length as `xs`.

    :type degree: int
    :param degree: Requested degree; `len(xs)` must be at least `degree + 1`.

    :rtype: :py:class:`numpy.polynomial.Chebyshev`
    :return: The fitted polynomial; call it to evaluate, `coef` holds the coefficients and `domain` the affine map.

    :raises LengthMismatch: If `xs` and `ys` differ in length.
    :raises SeriesTooShort: If there are fewer than `degree + 1` points.
    :raises RankDeficient: If even a constant cannot be fitted.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) != len(ys):
        raise LengthMismatch(len(xs), len(ys))
    if len(xs) < degree + 1:
        raise SeriesTooShort(len(xs), degree + 1)
    for attempt in range(degree, -1, -1):
        fit, (_, rank, _, _) = Chebyshev.fit(xs, ys, attempt, full=True)
        if rank == attempt + 1:
            return fit
        logger.warning('Fit of degree {} over {} points is rank deficient, retrying one lower.'
                       .format(attempt, len(xs)))
    raise RankDeficient(0)


def blend_radius(window_size, config):
    """
    Return how many points on each side of a break are cross-faded: `blend_radius` when set, otherwise a quarter
    window, so the fade spans half a window. Never more than `(window_size - 1) // 2`.

    :rtype: int
    :return: The radius.
    """
    radius = window_size // 4 if config.blend_radius is None else config.blend_radius
    return min(radius, (window_size - 1) // 2)


def _rms(values):
    return float(np.sqrt(np.mean(values ** 2)))


def is_level_shift(observed, break_values, stacked_values, guard):
    """
    Tell whether a break separates two levels rather than two fits of one curve.

    :type observed: :py:class:`numpy.ndarray`
    :param observed: Series values over the break fit range.

    :type break_values: :py:class:`numpy.ndarray`
    :param break_values: The break fit over the same range.

    :type stacked_values: :py:class:`numpy.ndarray`
    :param stacked_values: The stacked bucket fits over the same range.

    :type guard: float
    :param guard: Ratio of root mean square errors above which the break fit is rejected.

    :rtype: bool
    :return: True if the break fit misses the data more than `guard` times as badly as the bucket fits.
    """
    return _rms(observed - break_values) > guard * _rms(observed - stacked_values)


def _break_fit_range(break_index, window, series_length):
    start = min(max(break_index - window // 2, 0), series_length - window)
    return start, start + window


def build_trend(series, plan, config):
    """
    Build the trend replica: stacked per-bucket fits with every window break smoothed.

    Around each break a polynomial with the degree of the bucket before the break is fitted over `window_size`
    points centred on it. Its values are cross-faded into the stacked trend over the half window straddling the
    break: weight 1 at the break index, falling linearly over `window_size // 4` points on either side, or over
    `blend_radius` points when that is set. Values outside the half windows keep the stacked fit. When the break fit
    misses the data more than `shift_guard` times as badly as the stacked fits, the break is a level shift and only
    the break index is replaced, so the shift is not smeared into its neighbours.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to model.

    :type plan: :py:class:`pytsanomaly.model.buckets.BucketPlan`
    :param plan: Buckets tiling the series.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Supplies `blend_radius` and `shift_guard`.

    :rtype: :py:class:`pytsanomaly.model.buckets.TrendReplica`
    :return: The trend, one value per sample.

    :raises LengthMismatch: If the plan was made for a different length.
    """
    n = len(series)
    if n != plan.series_length:
        raise LengthMismatch(n, plan.series_length)
    values = series.values
    indices = np.arange(n, dtype=float)

    stacked = np.empty(n)
    for bucket in plan.buckets:
        xs = indices[bucket.start:bucket.end]
        stacked[bucket.start:bucket.end] = fit_polynomial(xs, values[bucket.start:bucket.end], bucket.degree)(xs)

    trend = stacked.copy()
    window = plan.window_size
    radius = blend_radius(window, config)
    for position, break_index in enumerate(plan.breaks()):
        start, stop = _break_fit_range(break_index, window, n)
        break_fit = fit_polynomial(indices[start:stop], values[start:stop], plan.buckets[position].degree)
        span = radius
        if span and is_level_shift(values[start:stop], break_fit(indices[start:stop]), stacked[start:stop],
                                   config.shift_guard):
            logger.debug('Break at {} separates two levels, fading it over no neighbour.'.format(break_index))
            span = 0
        low, high = max(break_index - span, 0), min(break_index + span + 1, n)
        xs = indices[low:high]
        weights = 1.0 - np.abs(xs - break_index) / (span + 1)
        trend[low:high] = weights * break_fit(xs) + (1.0 - weights) * stacked[low:high]
    return TrendReplica(trend)
