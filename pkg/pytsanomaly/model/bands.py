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


@dataclass(frozen=True)
class Band:
    """
    Dispersion of one bucket: its mean, its local standard deviation and the blended bound.
    """
    mean: float
    sd_local: float
    bound: float


@dataclass(frozen=True)
class BandSet:
    """
    Per-bucket bands of a sequence together with the global standard deviation they were blended with.

    Every bound equals `alpha_used * sd_local + (1 - alpha_used) * sd_global`.
    """
    per_bucket: Tuple[Band, ...]
    sd_global: float
    alpha_used: float

    def __len__(self):
        return len(self.per_bucket)

    @property
    def bounds(self):
        return [band.bound for band in self.per_bucket]

    @property
    def means(self):
        return [band.mean for band in self.per_bucket]
