# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You may not use this file except in compliance with
# the License. A copy of the License is located at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific language governing permissions
# and limitations under the License.
from os.path import join
from tempfile import TemporaryDirectory
from unittest import TestCase

import numpy as np
import pytest

from pytsanomaly.constants import Constants
from pytsanomaly.detection import detect_offline
from pytsanomaly.files.index_file import parse_indices, read_indices, write_indices
from pytsanomaly.files.report_document import build_document, dumps_document, loads_document
from pytsanomaly.files.series_reader import parse_series, read_series, write_series
from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import InputParseError
from pytsanomaly.synthetic_data import gen_breakout, gen_hetero_sine


@pytest.mark.usefixtures("config_variables")
class TestSeriesReader(TestCase):

    def test_single_column(self):
        self.assertEqual([1.0, 2.5, -3.0], parse_series(['1', '2.5', '-3']).values.tolist())

    def test_two_columns_with_header(self):
        series = parse_series(['index,value', '0,1.5', '1,2.5', '', '2,3.5'])
        self.assertEqual([1.5, 2.5, 3.5], series.values.tolist())

    def test_single_column_header(self):
        self.assertEqual([4.0, 5.0], parse_series(['value', '4', '5']).values.tolist())

    def test_malformed_line_names_its_number(self):
        lines = ['1', '2', '3', '4', '5', '6', 'abc', '8']
        with self.assertRaises(InputParseError) as context:
            parse_series(lines)
        self.assertEqual(7, context.exception.line_number)
        self.assertIn('line 7', str(context.exception))

    def test_non_finite_value(self):
        with self.assertRaises(InputParseError) as context:
            parse_series(['1', 'nan'])
        self.assertEqual(2, context.exception.line_number)

    def test_non_finite_first_row_is_not_a_header(self):
        for text in ('nan', 'inf', '-Infinity', '0,nan'):
            with self.assertRaises(InputParseError) as context:
                parse_series([text, '1.0', '2.0'])
            self.assertEqual(1, context.exception.line_number)

    def test_quoted_fields(self):
        series = parse_series(['"index","value"', '"0","1.5"', '"1","2.5"'])
        self.assertEqual([1.5, 2.5], series.values.tolist())

    def test_too_many_columns(self):
        with self.assertRaises(InputParseError):
            parse_series(['1', '0,1,2'])

    def test_bad_index_column(self):
        with self.assertRaises(InputParseError):
            parse_series(['0,1', 'x,2'])

    def test_write_then_read(self):
        series = gen_hetero_sine().series
        with TemporaryDirectory() as directory:
            path = join(directory, 'sine.csv')
            write_series(path, series)
            np.testing.assert_array_equal(series.values, read_series(path).values)


@pytest.mark.usefixtures("config_variables")
class TestIndexFile(TestCase):

    def test_parse(self):
        self.assertEqual(frozenset([3, 250]), parse_indices(['250', '', '3']))

    def test_empty(self):
        self.assertEqual(frozenset(), parse_indices([]))

    def test_rejects_text(self):
        with self.assertRaises(InputParseError) as context:
            parse_indices(['1', 'two'])
        self.assertEqual(2, context.exception.line_number)

    def test_rejects_negative(self):
        with self.assertRaises(InputParseError):
            parse_indices(['-1'])

    def test_written_sorted(self):
        with TemporaryDirectory() as directory:
            path = join(directory, 'truth')
            write_indices(path, {30, 4, 12})
            with open(path) as f:
                self.assertEqual('4\n12\n30\n', f.read())
            self.assertEqual(frozenset([4, 12, 30]), read_indices(path))


@pytest.mark.usefixtures("config_variables")
class TestReportDocument(TestCase):

    def setUp(self):
        self.config = DetectorConfig()

    def test_offline_document_round_trips(self):
        report = detect_offline(gen_breakout().series, self.config)
        document = loads_document(dumps_document(build_document(report, Constants.MODE_OFFLINE, self.config)))
        self.assertEqual(Constants.REPORT_SCHEMA_VERSION, document.schema_version)
        self.assertEqual(500, document.series_length)
        self.assertEqual(Constants.MODE_OFFLINE, document.mode)
        self.assertIsNone(document.period)
        self.assertIsNone(document.runs_executed)
        self.assertEqual(report.anomalies, document.anomalies)
        self.assertEqual(report.candidates, document.candidates)
        self.assertEqual(list(report.fas_per_bucket), document.fas)
        self.assertEqual(len(report.plan_used), len(document.buckets))
        self.assertEqual(0.5, document.config['alpha'])

    def test_period_round_trips(self):
        report = detect_offline(gen_hetero_sine().series, self.config)
        document = loads_document(dumps_document(build_document(report, Constants.MODE_OFFLINE, self.config)))
        self.assertEqual(28, document.period)
        self.assertEqual(frozenset(), document.anomalies)

    def test_online_document_without_report(self):
        text = dumps_document(build_document(None, Constants.MODE_ONLINE, self.config, 0, 0.0))
        document = loads_document(text)
        self.assertEqual(0, document.runs_executed)
        self.assertEqual(frozenset(), document.anomalies)

    def test_rejects_other_schema_version(self):
        document = build_document(None, Constants.MODE_ONLINE, self.config, 0, 0.0)
        document['schema_version'] = 99
        with self.assertRaises(InputParseError):
            loads_document(dumps_document(document))

    def test_rejects_garbage(self):
        with self.assertRaises(InputParseError):
            loads_document('{ unrelated: 1 }')
