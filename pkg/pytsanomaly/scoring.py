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
Scoring of predicted anomaly indices against ground truth, and the offline and online evaluation protocols.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import FrozenSet, Optional

from pytsanomaly.constants import Constants
from pytsanomaly.detection import detect_offline
from pytsanomaly.model.errors import InvalidConfiguration
from pytsanomaly.streaming import replay

logger = getLogger(__name__)


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self):
        return self.tp + self.tn + self.fp + self.fn

    def __str__(self):
        return 'tp={} tn={} fp={} fn={}'.format(self.tp, self.tn, self.fp, self.fn)


@dataclass(frozen=True)
class ProtocolResult:
    """
    Outcome of scoring one labeled series under one protocol. `runs_executed` is None offline.
    """
    mode: str
    predicted: FrozenSet[int]
    counts: ConfusionCounts
    f1_score: float
    runs_executed: Optional[int] = None


def _check_indices(indices, n, name):
    outside = sorted(index for index in indices if not 0 <= index < n)
    if outside:
        raise InvalidConfiguration('{} index {} is outside [0, {}).'.format(name, outside[0], n))


def confusion(predicted, truth, n, tolerance=0):
    """
    Count true and false positives and negatives over a series of length `n`.

    A prediction within `tolerance` of a truth index matches it; pairs are matched greedily by increasing distance,
    ties going to the smaller indices, and each index is matched at most once. Unmatched predictions are false
    positives, unmatched truths false negatives, and every other index a true negative.

    :type predicted: set
    :param predicted: Predicted anomaly indices.

    :type truth: set
    :param truth: True anomaly indices.

    :type n: int
    :param n: Length of the series.

    :type tolerance: int
    :param tolerance: Largest distance at which a prediction still matches.

    :rtype: :py:class:`pytsanomaly.scoring.ConfusionCounts`
    :return: The counts; they sum to `n`.

    :raises InvalidConfiguration: If an index is outside `[0, n)` or the tolerance is negative.
    """
    if tolerance < 0:
        raise InvalidConfiguration('tolerance must not be negative, got {}.'.format(tolerance))
    predicted = set(predicted)
    truth = set(truth)
    _check_indices(predicted, n, 'Predicted')
    _check_indices(truth, n, 'Truth')

    pairs = sorted((abs(p - t), p, t) for p in predicted for t in truth if abs(p - t) <= tolerance)
    matched_predictions = set()
    matched_truths = set()
    for _, p, t in pairs:
        if p not in matched_predictions and t not in matched_truths:
            matched_predictions.add(p)
            matched_truths.add(t)
    tp = len(matched_predictions)
    fp = len(predicted) - tp
    fn = len(truth) - tp
    return ConfusionCounts(tp, n - tp - fp - fn, fp, fn)


def f1(counts):
    """
    Compute the F1 score, the harmonic mean of precision and recall. Any zero denominator gives 0.

    :type counts: :py:class:`pytsanomaly.scoring.ConfusionCounts`
    :param counts: The confusion counts.

    :rtype: float
    :return: The score in [0, 1].
    """
    if counts.tp + counts.fp == 0 or counts.tp + counts.fn == 0:
        return 0.0
    precision = counts.tp / (counts.tp + counts.fp)
    recall = counts.tp / (counts.tp + counts.fn)
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def run_offline_protocol(labeled, config, optimized=False, tolerance=Constants.OFFLINE_TOLERANCE):
    """
    Feed the whole series to the detector at once and score the anomalies.

    :type labeled: :py:class:`pytsanomaly.synthetic_data.LabeledSeries`
    :param labeled: The series and its truth.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :type optimized: bool
    :param optimized: Use the optimized aperiodic plan.

    :type tolerance: int
    :param tolerance: Matching tolerance.

    :rtype: :py:class:`pytsanomaly.scoring.ProtocolResult`
    :return: Predictions, counts and F1.
    """
    report = detect_offline(labeled.series, config, optimized)
    counts = confusion(report.anomalies, labeled.truth, len(labeled.series), tolerance)
    logger.info('Offline protocol: {}.'.format(counts))
    return ProtocolResult(Constants.MODE_OFFLINE, report.anomalies, counts, f1(counts))


def run_online_protocol(labeled, config, optimize=True, tolerance=Constants.ONLINE_TOLERANCE):
    """
    Replay the series one sample at a time and score the samples flagged on arrival.

    :type labeled: :py:class:`pytsanomaly.synthetic_data.LabeledSeries`
    :param labeled: The series and its truth.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :type optimize: bool
    :param optimize: Skip samples inside the last signal band.

    :type tolerance: int
    :param tolerance: Matching tolerance.

    :rtype: :py:class:`pytsanomaly.scoring.ProtocolResult`
    :return: Predictions, counts, F1 and the number of runs.
    """
    decisions, _, runs = replay(labeled.series, config, optimize)
    origin = labeled.series.origin_index
    predicted = frozenset(decision.index - origin for decision in decisions if decision.is_anomaly)
    counts = confusion(predicted, labeled.truth, len(labeled.series), tolerance)
    logger.info('Online protocol: {} after {} run(s).'.format(counts, runs))
    return ProtocolResult(Constants.MODE_ONLINE, predicted, counts, f1(counts), runs)
