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
from typing import FrozenSet, Optional, Tuple

from pytsanomaly.model.bands import BandSet
from pytsanomaly.model.buckets import BucketPlan


@dataclass(frozen=True)
class AnomalyReport:
    """
    Outcome of one detection pass over a series.

    `candidates` holds every index outside its bucket's residual threshold; `anomalies` keeps those whose bucket
    passed the false alert filter, so `anomalies` is always a subset of `candidates`. Indices are relative to the
    analysed series.
    """
    candidates: FrozenSet[int]
    anomalies: FrozenSet[int]
    fas_per_bucket: Tuple[float, ...]
    residual_bands: BandSet
    signal_bands: BandSet
    period_used: Optional[int]
    plan_used: BucketPlan

    @property
    def series_length(self):
        return self.plan_used.series_length

    def sorted_anomalies(self):
        return sorted(self.anomalies)

    def last_signal_band(self):
        """
        Return the signal band of the final bucket, the one covering the newest samples.

        :rtype: :py:class:`pytsanomaly.model.bands.Band`
        :return: The band of the last bucket.
        """
        return self.signal_bands.per_bucket[-1]
