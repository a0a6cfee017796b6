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

from sys import float_info


class Constants:
    """
    Constant values used throughout the detector, the file formats and the command line.
    """
    ENV_PREFIX = "PYTSANOMALY_"

    REPORT_SCHEMA_VERSION = 1
    MODE_OFFLINE = "offline"
    MODE_ONLINE = "online"
    TRUTH_FILE_SUFFIX = ".truth"

    EXIT_SUCCESS = 0
    EXIT_INPUT_ERROR = 2
    EXIT_SERIES_TOO_SHORT = 3

    # Fewest samples any detection run accepts.
    MIN_SERIES_LENGTH = 3

    OFFLINE_TOLERANCE = 0
    ONLINE_TOLERANCE = 1

    DEFAULT_SEED = 7
    SINE_LENGTH = 256
    SINE_PERIOD = 28
    SINE_BASE_AMPLITUDE = 1.0
    SINE_AMPLITUDE_GROWTH = 0.01
    BREAKOUT_LENGTH = 500
    BREAKOUT_INDEX = 250
    NOISE_SD = 0.05
    LEVEL_SHIFT_TO_NOISE = 100.0

    # Largest finite float; marks a bucket whose residuals carry no spread.
    FAS_SENTINEL = float_info.max
