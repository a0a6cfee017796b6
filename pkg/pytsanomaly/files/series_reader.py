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
Reading and writing series files.

A series file holds one sample per line, either a bare value or an `index,value` pair; the index column is checked
but the order of the rows defines the series. A first line whose fields are not numbers is taken as a header. Blank lines
are ignored.
"""
from csv import reader as csv_reader
from logging import getLogger
from math import isfinite
from sys import stdin

from pytsanomaly.model.errors import InputParseError
from pytsanomaly.model.time_series import TimeSeries

logger = getLogger(__name__)

STDIN_PATH = '-'
DELIMITER = ','


class NotNumeric(ValueError):
    """
    A field that does not convert to a number; on the first row this marks a header.
    """


def _to_number(convert, field):
    try:
        return convert(field)
    except ValueError:
        raise NotNumeric('{!r} is not a number'.format(field))


def _parse_row(fields):
    if len(fields) == 2:
        _to_number(int, fields[0])
    elif len(fields) != 1:
        raise ValueError('expected one or two columns, found {}'.format(len(fields)))
    value = _to_number(float, fields[-1])
    if not isfinite(value):
        raise ValueError('value is not finite')
    return value


def parse_series(lines):
    """
    Parse the lines of a series file.

    :type lines: list
    :param lines: The lines of the file, in order.

    :rtype: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :return: The series.

    :raises InputParseError: If a line other than the header cannot be parsed; carries the 1-based line number.
    """
    values = []
    header_allowed = True
    rows = csv_reader(lines, delimiter=DELIMITER)
    for row in rows:
        fields = [field.strip() for field in row]
        if not any(fields):
            continue
        line_number = rows.line_num
        text = DELIMITER.join(fields)
        try:
            values.append(_parse_row(fields))
        except ValueError as e:
            if header_allowed and isinstance(e, NotNumeric):
                logger.debug('Treating line {} as a header: {!r}.'.format(line_number, text))
            else:
                raise InputParseError(line_number, text, str(e))
        header_allowed = False
    return TimeSeries(values)


def read_series(path):
    """
    Read a series file, or standard input when `path` is '-'.

    :type path: str
    :param path: Path of the file.

    :rtype: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :return: The series.

    :raises InputParseError: If a line cannot be parsed.
    """
    if path == STDIN_PATH:
        series = parse_series(stdin.read().splitlines())
    else:
        with open(path, encoding='utf-8') as f:
            series = parse_series(f.read().splitlines())
    logger.info('Read {} sample(s) from {}.'.format(len(series), 'standard input' if path == STDIN_PATH else path))
    return series


def write_series(path, series):
    """
    Write a series as one value per line, with enough digits to read back the same floats.

    :type path: str
    :param path: Path of the file to create or overwrite.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to write.
    """
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.writelines('{!r}\n'.format(value) for value in series.values.tolist())
