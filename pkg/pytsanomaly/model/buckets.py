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
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class Bucket:
    """
    A contiguous index range `[start, end)` that receives its own polynomial model of `degree`.
    """
    start: int
    end: int
    degree: int

    @property
    def size(self):
        return self.end - self.start


@dataclass(frozen=True)
class BucketPlan:
    """
    Buckets tiling `[0, series_length)` without gaps or overlap.

    `window_size` is the nominal bucket width the plan was cut with; break smoothing fits over that many points.
    """
    buckets: Tuple[Bucket, ...]
    series_length: int
    window_size: int

    def __len__(self):
        return len(self.buckets)

    def breaks(self):
        """
        Return the interior break points, the first index of every bucket after the first.

        :rtype: list
        :return: Break indices in ascending order.
        """
        return [bucket.start for bucket in self.buckets[1:]]

    def bucket_ids(self):
        """
        Return, for every index of the series, the position of the bucket holding it.

        :rtype: :py:class:`numpy.ndarray`
        :return: Integer array of length `series_length`.
        """
        ids = np.empty(self.series_length, dtype=int)
        for position, bucket in enumerate(self.buckets):
            ids[bucket.start:bucket.end] = position
        return ids

    def bucket_of(self, index):
        """
        Return the position of the bucket holding `index`.

        :type index: int
        :param index: A series index in `[0, series_length)`.

        :rtype: int
        :return: The bucket position.
        """
        starts = [bucket.start for bucket in self.buckets]
        return int(np.searchsorted(starts, index, side='right')) - 1


@dataclass(frozen=True, eq=False)
class TrendReplica:
    """
    The stacked and break-smoothed local fits, one value per sample of the source series.
    """
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return len(self.values)
