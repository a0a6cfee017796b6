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

from dataclasses import dataclass

import numpy as np

from pytsanomaly.model.errors import NonFiniteSample


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    A uniformly indexed sequence of finite samples.

    The values are held in a read-only float array, so a series can be shared freely once built. Use
    :func:`validate_series` to build one from raw input.
    """
    values: np.ndarray
    origin_index: int = 0

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return len(self.values)

    def append(self, sample):
        """
        Return a new series with `sample` added at the end.

        :type sample: float
        :param sample: The value to append.

        :rtype: :py:class:`pytsanomaly.model.time_series.TimeSeries`
        :return: The extended series.

        :raises NonFiniteSample: If `sample` is NaN or infinite.
        """
        if not np.isfinite(sample):
            raise NonFiniteSample(self.origin_index + len(self))
        return TimeSeries(np.append(self.values, float(sample)), self.origin_index)

    def tail(self, count):
        """
        Return the trailing `count` samples, keeping absolute indices through `origin_index`.

        :type count: int
        :param count: The number of samples to keep.

        :rtype: :py:class:`pytsanomaly.model.time_series.TimeSeries`
        :return: The truncated series, or this series when it is not longer than `count`.
        """
        if len(self) <= count:
            return self
        dropped = len(self) - count
        return TimeSeries(self.values[dropped:], self.origin_index + dropped)


def validate_series(raw, origin_index=0):
    """
    Build a :py:class:`TimeSeries` from raw samples, rejecting NaN and infinite values.

    :type raw: list
    :param raw: Sequence of real samples in series order.

    :type origin_index: int
    :param origin_index: Index of the first sample.

    :rtype: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :return: The validated series.

    :raises NonFiniteSample: If any sample is NaN or infinite; carries the first offending index.
    """
    values = np.asarray(raw, dtype=float).reshape(-1)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size > 0:
        raise NonFiniteSample(int(bad[0]))
    return TimeSeries(values, origin_index)
