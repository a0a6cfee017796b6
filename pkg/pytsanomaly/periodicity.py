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
Periodicity detection.

A lag is a true period only when the periodogram peaks at its frequency and the autocorrelation has a local maximum
at the lag itself. The periodogram only places a lag near its hill, so each lag first climbs the autocorrelation to
the hill top. Candidate lags longer than a fraction of the series (the confidence window) are discarded, since
the tail of a short autocorrelation sequence shows hills that are not periods. When several periods validate, the
smallest one wins.
"""
from dataclasses import dataclass
from logging import getLogger
from math import floor, sqrt
from typing import Optional

import numpy as np

from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import DegenerateSeries, LagOutOfRange, SeriesTooShort

logger = getLogger(__name__)

MIN_PSD_LENGTH = 4
MIN_LAG = 2


@dataclass(frozen=True)
class PeriodCandidate:
    """
    A lag proposed by the periodogram, with the power of its bin and the autocorrelation at the lag.
    """
    lag: int
    psd_power: float
    acf_value: float
    validated: bool = False


@dataclass(frozen=True, eq=False)
class Periodogram:
    """
    Squared DFT magnitudes of a mean-removed series for bins 1 to n // 2.
    """
    bins: np.ndarray
    powers: np.ndarray

    def __len__(self):
        return len(self.bins)

    def __iter__(self):
        return iter(zip(self.bins.tolist(), self.powers.tolist()))


@dataclass(frozen=True)
class PeriodCache:
    """
    The period kept across runs, and a newly seen period waiting for confirmation.
    """
    confirmed_period: Optional[int] = None
    consecutive_confirmations: int = 0
    pending_period: Optional[int] = None


def autocorrelation(series, max_lag, sd_epsilon=DetectorConfig.sd_epsilon):
    """
    Compute the normalized sample autocorrelation for lags 0 to `max_lag`.

    The biased estimator is used: lagged products are divided by n, so every value lies in [-1, 1].

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to correlate with itself.

    :type max_lag: int
    :param max_lag: Largest lag to return; must be smaller than the series length.

    :type sd_epsilon: float
    :param sd_epsilon: Standard deviation under which the series counts as constant.

    :rtype: :py:class:`numpy.ndarray`
    :return: Array `r` of length `max_lag + 1` with `r[0] == 1`.

    :raises SeriesTooShort: If the series has fewer than two samples.
    :raises LagOutOfRange: If `max_lag` is not in `[0, len(series))`.
    :raises DegenerateSeries: If the variance does not exceed `sd_epsilon ** 2`.
    """
    n = len(series)
    if n < 2:
        raise SeriesTooShort(n, 2)
    if not 0 <= max_lag < n:
        raise LagOutOfRange(max_lag, 0, n - 1)
    centered = series.values - series.values.mean()
    variance = float(np.dot(centered, centered)) / n
    if variance <= sd_epsilon ** 2:
        raise DegenerateSeries('Series variance {} is too small to normalize.'.format(variance))
    spectrum = np.fft.rfft(centered, 2 * n)
    autocovariance = np.fft.irfft(spectrum * np.conj(spectrum), 2 * n)[:max_lag + 1] / n
    acf = autocovariance / variance
    acf[0] = 1.0
    return acf


def power_spectral_density(series):
    """
    Compute the periodogram of the mean-removed series, without the DC bin.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to transform.

    :rtype: :py:class:`pytsanomaly.periodicity.Periodogram`
    :return: Bins 1 to n // 2 with their squared magnitudes.

    :raises SeriesTooShort: If the series has fewer than four samples.
    """
    n = len(series)
    if n < MIN_PSD_LENGTH:
        raise SeriesTooShort(n, MIN_PSD_LENGTH)
    centered = series.values - series.values.mean()
    powers = np.abs(np.fft.rfft(centered)) ** 2
    bins = np.arange(1, n // 2 + 1)
    return Periodogram(bins, powers[1:n // 2 + 1])


def _local_maxima(powers):
    padded = np.concatenate(([-np.inf], powers, [-np.inf]))
    return np.flatnonzero((powers > padded[:-2]) & (powers > padded[2:]))


def _bin_to_lag(n, frequency_bin):
    return int(floor(n / frequency_bin + 0.5))


def confidence_window(n, config):
    """
    Return the longest lag accepted as a period for a series of length `n`.

    :rtype: int
    :return: `floor(n * acf_confidence_fraction)`.
    """
    return int(floor(n * config.acf_confidence_fraction))


def _peak_lags(psd, n, config):
    peaks = _local_maxima(psd.powers)
    strongest = peaks[np.argsort(psd.powers[peaks], kind='stable')[::-1]][:config.psd_peak_count]
    longest = confidence_window(n, config)
    lags = {}
    for position in strongest:
        lag = _bin_to_lag(n, int(psd.bins[position]))
        if MIN_LAG <= lag <= longest:
            lags.setdefault(lag, float(psd.powers[position]))
    return lags


def candidate_periods(psd, n, config):
    """
    Turn the strongest periodogram peaks into candidate lags inside the confidence window.

    :type psd: :py:class:`pytsanomaly.periodicity.Periodogram`
    :param psd: Output of :func:`power_spectral_density`.

    :type n: int
    :param n: Length of the series the periodogram came from.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Supplies `psd_peak_count` and `acf_confidence_fraction`.

    :rtype: list
    :return: Distinct lags in ascending order, possibly empty.
    """
    return sorted(_peak_lags(psd, n, config))


def validate_period(lag, acf, floor_value=0.0):
    """
    Check that the autocorrelation has a local maximum at `lag`.

    :type lag: int
    :param lag: Candidate period.

    :type acf: :py:class:`numpy.ndarray`
    :param acf: Output of :func:`autocorrelation`, covering at least `lag + 1`.

    :type floor_value: float
    :param floor_value: Value the autocorrelation at `lag` must exceed.

    :rtype: bool
    :return: True if `acf[lag]` rises above the previous lag, is not below the next one and exceeds the floor.

    :raises LagOutOfRange: If `lag` is not in `[2, len(acf) - 2]`.
    """
    if not MIN_LAG <= lag <= len(acf) - 2:
        raise LagOutOfRange(lag, MIN_LAG, len(acf) - 2)
    return bool(acf[lag] > acf[lag - 1] and acf[lag] >= acf[lag + 1] and acf[lag] > floor_value)


def climb_to_peak(acf, lag):
    """
    Walk from `lag` uphill along the autocorrelation to the nearest local maximum.

    A periodogram bin only resolves the period to within a lag or two, so the lag it proposes usually sits on the
    flank of the autocorrelation hill. The walk stops at `MIN_LAG` and at the second to last lag of `acf`.

    :type acf: :py:class:`numpy.ndarray`
    :param acf: Output of :func:`autocorrelation`.

    :type lag: int
    :param lag: Starting lag.

    :rtype: int
    :return: The lag of the hill top.
    """
    last = len(acf) - 2
    lag = min(max(lag, MIN_LAG), last)
    while lag < last and acf[lag + 1] > acf[lag]:
        lag += 1
    while lag > MIN_LAG and acf[lag - 1] > acf[lag]:
        lag -= 1
    return lag


def inspect_periodicity(series, config):
    """
    Evaluate every candidate period of a series against its autocorrelation.

    Each periodogram lag is moved to the top of its autocorrelation hill before it is validated, and lags that
    land on the same hill are reported once.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to analyse.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :rtype: list
    :return: :py:class:`PeriodCandidate` records in ascending lag order; empty when the series is too short,
             constant or shows no peak inside the confidence window.
    """
    n = len(series)
    if n < max(config.min_detect_length, MIN_PSD_LENGTH):
        return []
    lags = _peak_lags(power_spectral_density(series), n, config)
    if not lags:
        return []
    try:
        acf = autocorrelation(series, min(confidence_window(n, config) + 1, n - 1), config.sd_epsilon)
    except DegenerateSeries:
        return []
    floor_value = config.acf_significance / sqrt(n)
    candidates = {}
    for lag, power in lags.items():
        peak = climb_to_peak(acf, lag)
        if peak not in candidates:
            candidates[peak] = PeriodCandidate(peak, power, float(acf[peak]), validate_period(peak, acf, floor_value))
    return [candidates[lag] for lag in sorted(candidates)]


def detect_periodicity(series, config):
    """
    Return the smallest validated period of a series, or None.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to analyse.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :rtype: int
    :return: The period in samples, or None when the series is shorter than `min_detect_length`, constant, or has no
             validated candidate.
    """
    candidates = inspect_periodicity(series, config)
    validated = [candidate.lag for candidate in candidates if candidate.validated]
    logger.debug('Period candidates: {}.'.format(candidates))
    if not validated:
        return None
    return validated[0]


def update_period_cache(cache, detected, confirmations=DetectorConfig.period_confirmations):
    """
    Fold one detection result into the period cache.

    An absent detection keeps the cache as it is, so a period survives stretches where noise hides it. The first
    detection is confirmed at once; a different period replaces the confirmed one only after `confirmations`
    consecutive identical detections.

    :type cache: :py:class:`pytsanomaly.periodicity.PeriodCache`
    :param cache: The current cache; it is not modified.

    :type detected: int
    :param detected: The latest detection, or None.

    :type confirmations: int
    :param confirmations: Identical detections needed to switch periods.

    :rtype: :py:class:`pytsanomaly.periodicity.PeriodCache`
    :return: The updated cache.
    """
    if detected is None:
        return cache
    if cache.confirmed_period is None or detected == cache.confirmed_period:
        return PeriodCache(confirmed_period=detected)
    count = cache.consecutive_confirmations + 1 if detected == cache.pending_period else 1
    if count >= confirmations:
        logger.info('Period changed from {} to {}.'.format(cache.confirmed_period, detected))
        return PeriodCache(confirmed_period=detected)
    return PeriodCache(cache.confirmed_period, count, detected)
