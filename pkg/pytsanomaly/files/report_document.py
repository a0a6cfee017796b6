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
The detection report as an Ion text document.

Fields: `schema_version`, `series_length`, `mode`, `period` (null when aperiodic), `config` (every detector setting),
`candidates`, `anomalies`, `fas` (one score per bucket), `buckets` (range, degree, residual and signal bands of every
bucket), `runs_executed` (null offline) and `wall_time_seconds`.
"""
from logging import getLogger

from amazon.ion.exceptions import IonException
from amazon.ion.simple_types import IonPyNull
from amazon.ion.simpleion import dumps, loads

from pytsanomaly.constants import Constants
from pytsanomaly.model.errors import InputParseError

logger = getLogger(__name__)


class ReportDocument:
    """
    Represents a parsed report document.
    """
    def __init__(self, schema_version, series_length, mode, period, config, candidates, anomalies, fas, buckets,
                 runs_executed, wall_time_seconds):
        self.schema_version = schema_version
        self.series_length = series_length
        self.mode = mode
        self.period = period
        self.config = config
        self.candidates = candidates
        self.anomalies = anomalies
        self.fas = fas
        self.buckets = buckets
        self.runs_executed = runs_executed
        self.wall_time_seconds = wall_time_seconds


def _band_fields(prefix, band):
    return {prefix + '_mean': band.mean, prefix + '_sd': band.sd_local, prefix + '_bound': band.bound}


def build_document(report, mode, config, runs_executed=None, wall_time_seconds=0.0, anomalies=None):
    """
    Build the document of a report as plain Python values.

    :type report: :py:class:`pytsanomaly.model.anomaly_report.AnomalyReport`
    :param report: The report; None for an online replay that never ran detection.

    :type mode: str
    :param mode: 'offline' or 'online'.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: The settings the report was produced with.

    :type runs_executed: int
    :param runs_executed: Number of detection runs of an online replay.

    :type wall_time_seconds: float
    :param wall_time_seconds: Elapsed time of the detection.

    :type anomalies: set
    :param anomalies: Anomalies to list instead of those of `report`, such as the verdicts of an online replay.

    :rtype: dict
    :return: The document.
    """
    document = {
        'schema_version': Constants.REPORT_SCHEMA_VERSION,
        'series_length': 0,
        'mode': mode,
        'period': None,
        'config': config.as_dict(),
        'candidates': [],
        'anomalies': [],
        'fas': [],
        'buckets': [],
        'runs_executed': runs_executed,
        'wall_time_seconds': float(wall_time_seconds),
    }
    if report is None:
        document['anomalies'] = sorted(anomalies or ())
        return document
    buckets = []
    for bucket, residual, signal in zip(report.plan_used.buckets, report.residual_bands.per_bucket,
                                        report.signal_bands.per_bucket):
        entry = {'start': bucket.start, 'end': bucket.end, 'degree': bucket.degree}
        entry.update(_band_fields('residual', residual))
        entry.update(_band_fields('signal', signal))
        buckets.append(entry)
    document.update({
        'series_length': report.series_length,
        'period': report.period_used,
        'candidates': sorted(report.candidates),
        'anomalies': report.sorted_anomalies() if anomalies is None else sorted(anomalies),
        'fas': [float(score) for score in report.fas_per_bucket],
        'buckets': buckets,
    })
    return document


def dumps_document(document):
    """
    Render a document as Ion text.

    :type document: dict
    :param document: Output of :func:`build_document`.

    :rtype: str
    :return: The Ion text.
    """
    return dumps(document, binary=False, indent='  ', omit_version_marker=True)


def _optional(value):
    if value is None or isinstance(value, IonPyNull):
        return None
    return value


def from_ion(ion_value):
    """
    Construct a new ReportDocument object from an IonStruct.

    :type ion_value: :py:class:`amazon.ion.simple_types.IonPyDict`
    :param ion_value: The IonStruct of a report document.

    :rtype: :py:class:`pytsanomaly.files.report_document.ReportDocument`
    :return: The constructed ReportDocument object.
    """
    period = _optional(ion_value.get('period'))
    runs_executed = _optional(ion_value.get('runs_executed'))
    config = {str(key): _optional(value) for key, value in ion_value.get('config').items()}
    return ReportDocument(int(ion_value.get('schema_version')), int(ion_value.get('series_length')),
                          str(ion_value.get('mode')), None if period is None else int(period), config,
                          frozenset(int(index) for index in ion_value.get('candidates')),
                          frozenset(int(index) for index in ion_value.get('anomalies')),
                          [float(score) for score in ion_value.get('fas')],
                          [dict(bucket) for bucket in ion_value.get('buckets')],
                          None if runs_executed is None else int(runs_executed),
                          float(ion_value.get('wall_time_seconds')))


def loads_document(text):
    """
    Parse an Ion text report document.

    :type text: str
    :param text: The Ion text.

    :rtype: :py:class:`pytsanomaly.files.report_document.ReportDocument`
    :return: The parsed document.

    :raises InputParseError: If the text is not a report document of a supported schema version.
    """
    try:
        document = from_ion(loads(text))
    except (IonException, AttributeError, TypeError, ValueError) as e:
        raise InputParseError(1, text[:40], 'not a report document: {}'.format(e))
    if document.schema_version != Constants.REPORT_SCHEMA_VERSION:
        raise InputParseError(1, text[:40], 'unsupported schema version {}'.format(document.schema_version))
    return document
