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

class AnomalyDetectionError(Exception):
    """
    Base class of every error raised by the detector.
    """


class NonFiniteSample(AnomalyDetectionError, ValueError):
    """
    A sample is NaN or infinite.
    """
    def __init__(self, index):
        self.index = index
        super().__init__('Sample at index {} is not a finite number.'.format(index))


class SeriesTooShort(AnomalyDetectionError, ValueError):
    """
    The series has fewer samples than the operation needs.
    """
    def __init__(self, length, minimum):
        self.length = length
        self.minimum = minimum
        super().__init__('Series of length {} is too short, at least {} samples are required.'.format(length, minimum))


class DegenerateSeries(AnomalyDetectionError, ValueError):
    """
    The series has no variance to normalize by.
    """


class LagOutOfRange(AnomalyDetectionError, ValueError):
    """
    A lag falls outside the range covered by an autocorrelation sequence.
    """
    def __init__(self, lag, low, high):
        self.lag = lag
        self.low = low
        self.high = high
        super().__init__('Lag {} is outside [{}, {}].'.format(lag, low, high))


class RankDeficient(AnomalyDetectionError, ArithmeticError):
    """
    A least squares design matrix is numerically singular.
    """
    def __init__(self, degree):
        self.degree = degree
        super().__init__('Design matrix for degree {} is rank deficient.'.format(degree))


class LengthMismatch(AnomalyDetectionError, ValueError):
    """
    Two sequences that must be aligned have different lengths.
    """
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__('Length mismatch: {} != {}.'.format(left, right))


class InvalidConfiguration(AnomalyDetectionError, ValueError):
    """
    A detector setting is out of its admissible range.
    """


class InputParseError(AnomalyDetectionError, ValueError):
    """
    A line of an input file cannot be parsed.
    """
    def __init__(self, line_number, text, reason=''):
        self.line_number = line_number
        self.text = text
        message = 'Unable to parse line {}: {!r}'.format(line_number, text)
        if reason:
            message += ' ({})'.format(reason)
        super().__init__(message)
