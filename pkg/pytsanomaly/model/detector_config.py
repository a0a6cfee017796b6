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

from dataclasses import dataclass, fields, replace
from logging import getLogger
from os import environ as os_environ
from typing import Optional

from pytsanomaly.constants import Constants
from pytsanomaly.model.errors import InvalidConfiguration

logger = getLogger(__name__)

TRUE_STRINGS = ('1', 'true', 'yes', 'on')
FALSE_STRINGS = ('0', 'false', 'no', 'off')
OPTIONAL_INTEGERS = ('blend_radius', 'max_buffer')


@dataclass(frozen=True)
class DetectorConfig:
    """
    Every tunable of the detector.

    `alpha` weighs local against global deviation in the bounds, `fas_threshold` is the false alert filter cut-off
    and `bound_multiplier` scales the bounds into the outlier threshold. The window settings drive bucketing: a
    detected period sets the window and the degree grows by one for every `degree_step` points up to `max_degree`;
    aperiodic series use `aperiodic_window` with a linear model, or `optimized_window_fraction` of the length with
    `optimized_degree` when optimized. Break smoothing fades over a quarter window on each side of a break unless
    `blend_radius` sets the number of points. A break whose own fit is more than `shift_guard` times worse than the
    bucket fits around it is a level shift, and only the break index takes its fit.
    """
    alpha: float = 0.5
    fas_threshold: float = 1.0
    bound_multiplier: float = 2.0
    aperiodic_window: int = 10
    optimized_window_fraction: float = 0.10
    optimized_degree: int = 2
    degree_step: int = 5
    max_degree: int = 8
    min_detect_length: int = 20
    sd_epsilon: float = 1e-12
    psd_peak_count: int = 5
    acf_confidence_fraction: float = 1.0 / 3.0
    acf_significance: float = 5.0
    blend_radius: Optional[int] = None
    shift_guard: float = 3.0
    period_confirmations: int = 2
    optimize_runs: bool = True
    max_buffer: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidConfiguration('alpha must lie in [0, 1], got {}.'.format(self.alpha))
        if not 0.0 < self.optimized_window_fraction <= 1.0:
            raise InvalidConfiguration('optimized_window_fraction must lie in (0, 1], got {}.'
                                       .format(self.optimized_window_fraction))
        if not 0.0 < self.acf_confidence_fraction < 1.0:
            raise InvalidConfiguration('acf_confidence_fraction must lie in (0, 1), got {}.'
                                       .format(self.acf_confidence_fraction))
        for name in ('bound_multiplier', 'sd_epsilon'):
            if not getattr(self, name) > 0.0:
                raise InvalidConfiguration('{} must be positive, got {}.'.format(name, getattr(self, name)))
        for name in ('aperiodic_window', 'optimized_degree', 'degree_step', 'max_degree', 'min_detect_length',
                     'psd_peak_count', 'period_confirmations'):
            if getattr(self, name) < 1:
                raise InvalidConfiguration('{} must be a positive integer, got {}.'.format(name, getattr(self, name)))
        if self.min_detect_length < Constants.MIN_SERIES_LENGTH:
            raise InvalidConfiguration('min_detect_length must be at least {}, got {}.'
                                       .format(Constants.MIN_SERIES_LENGTH, self.min_detect_length))
        if self.aperiodic_window < 2:
            raise InvalidConfiguration('aperiodic_window must be at least 2, got {}.'.format(self.aperiodic_window))
        if self.acf_significance < 0.0:
            raise InvalidConfiguration('acf_significance must not be negative, got {}.'.format(self.acf_significance))
        if self.blend_radius is not None and self.blend_radius < 0:
            raise InvalidConfiguration('blend_radius must not be negative, got {}.'.format(self.blend_radius))
        if self.shift_guard < 1.0:
            raise InvalidConfiguration('shift_guard must be at least 1, got {}.'.format(self.shift_guard))
        if self.max_buffer is not None and self.max_buffer < self.min_detect_length:
            raise InvalidConfiguration('max_buffer must be at least min_detect_length ({}), got {}.'
                                       .format(self.min_detect_length, self.max_buffer))

    def replace(self, **changes):
        """
        Return a copy with the given fields changed.

        :rtype: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
        :return: The new configuration, validated again.
        """
        return replace(self, **changes)

    def as_dict(self):
        """
        Return the configuration as a plain dictionary, one entry per field.

        :rtype: dict
        :return: Field names mapped to their values.
        """
        return {field.name: getattr(self, field.name) for field in fields(self)}

    @classmethod
    def from_env(cls, environ=None, **overrides):
        """
        Build a configuration from `PYTSANOMALY_<FIELD>` environment variables, then apply explicit overrides.

        Overrides whose value is None are ignored, so unset command line flags fall through to the environment.

        :type environ: dict
        :param environ: The environment to read; defaults to the process environment.

        :rtype: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
        :return: The resulting configuration.

        :raises InvalidConfiguration: If a variable cannot be converted or a value is out of range.
        """
        environ = os_environ if environ is None else environ
        values = {}
        for field in fields(cls):
            key = Constants.ENV_PREFIX + field.name.upper()
            if key in environ:
                values[field.name] = _convert(field.name, environ[key], field.default)
                logger.debug('Configuration {} taken from environment variable {}.'.format(field.name, key))
        values.update({name: value for name, value in overrides.items() if value is not None})
        return cls(**values)


def _convert(name, text, default):
    text = text.strip()
    try:
        if name in OPTIONAL_INTEGERS:
            return None if text.lower() in ('', 'none') else int(text)
        if isinstance(default, bool):
            if text.lower() in TRUE_STRINGS:
                return True
            if text.lower() in FALSE_STRINGS:
                return False
            raise ValueError(text)
        if isinstance(default, int):
            return int(text)
        return float(text)
    except ValueError:
        raise InvalidConfiguration('Cannot convert {!r} for setting {}.'.format(text, name))
