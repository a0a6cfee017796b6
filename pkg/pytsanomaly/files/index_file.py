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

from logging import getLogger

from pytsanomaly.model.errors import InputParseError

logger = getLogger(__name__)


def parse_indices(lines):
    """
    Parse newline-delimited non-negative integer indices. Blank lines are ignored.

    :type lines: list
    :param lines: The lines of the file.

    :rtype: frozenset
    :return: The indices.

    :raises InputParseError: If a line is not a non-negative integer.
    """
    indices = set()
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            index = int(text)
        except ValueError:
            raise InputParseError(line_number, text, 'not an integer')
        if index < 0:
            raise InputParseError(line_number, text, 'negative index')
        indices.add(index)
    return frozenset(indices)


def read_indices(path):
    """
    Read an index file such as a truth file or a prediction file.

    :type path: str
    :param path: Path of the file.

    :rtype: frozenset
    :return: The indices.

    :raises InputParseError: If a line cannot be parsed.
    """
    with open(path, encoding='utf-8') as f:
        indices = parse_indices(f.read().splitlines())
    logger.info('Read {} index(es) from {}.'.format(len(indices), path))
    return indices


def write_indices(path, indices):
    """
    Write indices in ascending order, one per line.

    :type path: str
    :param path: Path of the file to create or overwrite.

    :type indices: set
    :param indices: The indices to write.
    """
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.writelines('{}\n'.format(index) for index in sorted(indices))
