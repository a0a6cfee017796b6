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
Synthetic benchmark series with known anomalies.

Both generators draw their noise from a seeded PCG64 generator, so a seed gives the same series on every platform.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import FrozenSet

import numpy as np

from pytsanomaly.constants import Constants
from pytsanomaly.model.errors import InvalidConfiguration
from pytsanomaly.model.time_series import TimeSeries

logger = getLogger(__name__)


@dataclass(frozen=True)
class LabeledSeries:
    """
    A series together with the indices of its true anomalies.
    """
    series: TimeSeries
    truth: FrozenSet[int]

    def __post_init__(self):
        if any(not 0 <= index < len(self.series) for index in self.truth):
            raise InvalidConfiguration('Truth indices must lie in [0, {}).'.format(len(self.series)))


def gen_hetero_sine(n=Constants.SINE_LENGTH, period=Constants.SINE_PERIOD,
                    base_amplitude=Constants.SINE_BASE_AMPLITUDE, amplitude_growth=Constants.SINE_AMPLITUDE_GROWTH,
                    noise_sd=Constants.NOISE_SD, seed=Constants.DEFAULT_SEED):
    """
    Generate a sine wave whose amplitude grows linearly, plus gaussian noise. It holds no anomaly.

    :type n: int
    :param n: Number of samples; at least `2 * period`.

    :type period: int
    :param period: Period of the sine in samples.

    :type base_amplitude: float
    :param base_amplitude: Amplitude at index 0.

    :type amplitude_growth: float
    :param amplitude_growth: Amplitude added per sample.

    :type noise_sd: float
    :param noise_sd: Standard deviation of the noise.

    :type seed: int
    :param seed: Seed of the noise generator.

    :rtype: :py:class:`pytsanomaly.synthetic_data.LabeledSeries`
    :return: The series with an empty truth set.

    :raises InvalidConfiguration: If the parameters are out of range.
    """
    if period < 1 or n < 2 * period:
        raise InvalidConfiguration('A sine needs n >= 2 * period, got n={} and period={}.'.format(n, period))
    if noise_sd < 0:
        raise InvalidConfiguration('noise_sd must not be negative, got {}.'.format(noise_sd))
    rng = np.random.default_rng(seed)
    t = np.arange(n, dtype=float)
    values = (base_amplitude + amplitude_growth * t) * np.sin(2.0 * np.pi * t / period) + rng.normal(0.0, noise_sd, n)
    logger.debug('Generated a sine of {} samples with period {}.'.format(n, period))
    return LabeledSeries(TimeSeries(values), frozenset())


def gen_breakout(n=Constants.BREAKOUT_LENGTH, break_index=Constants.BREAKOUT_INDEX, level_shift=None,
                 noise_sd=Constants.NOISE_SD, seed=Constants.DEFAULT_SEED):
    """
    Generate gaussian noise around 0 whose level jumps by `level_shift` at `break_index`.

    :type n: int
    :param n: Number of samples.

    :type break_index: int
    :param break_index: First shifted sample; in `(0, n)`.

    :type level_shift: float
    :param level_shift: Size of the jump; defaults to 100 times `noise_sd`.

    :type noise_sd: float
    :param noise_sd: Standard deviation of the noise.

    :type seed: int
    :param seed: Seed of the noise generator.

    :rtype: :py:class:`pytsanomaly.synthetic_data.LabeledSeries`
    :return: The series with truth `{break_index}`.

    :raises InvalidConfiguration: If the parameters are out of range.
    """
    if not 0 < break_index < n:
        raise InvalidConfiguration('break_index must lie in (0, {}), got {}.'.format(n, break_index))
    if noise_sd < 0:
        raise InvalidConfiguration('noise_sd must not be negative, got {}.'.format(noise_sd))
    if level_shift is None:
        level_shift = Constants.LEVEL_SHIFT_TO_NOISE * noise_sd
    rng = np.random.default_rng(seed)
    values = rng.normal(0.0, noise_sd, n)
    values[break_index:] += level_shift
    logger.debug('Generated a breakout of {} samples at index {}.'.format(n, break_index))
    return LabeledSeries(TimeSeries(values), frozenset([break_index]))
