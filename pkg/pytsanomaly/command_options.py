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
Command line options shared by the commands, and the mapping of expected failures to exit codes.
"""
from logging import getLogger

from pytsanomaly.constants import Constants
from pytsanomaly.model.detector_config import DetectorConfig
from pytsanomaly.model.errors import AnomalyDetectionError, SeriesTooShort

logger = getLogger(__name__)

ON_OFF = ('on', 'off')


def add_config_arguments(parser):
    """
    Add the detector settings flags. Unset flags fall back to `PYTSANOMALY_*` environment variables, then defaults.

    :type parser: :py:class:`argparse.ArgumentParser`
    :param parser: The parser to extend.
    """
    parser.add_argument('--alpha', type=float, help='weight of the local deviation in the bounds')
    parser.add_argument('--fas-threshold', type=float, help='largest false alert score that keeps a bucket')
    parser.add_argument('--multiplier', type=float, help='outlier threshold in units of the bound')
    parser.add_argument('--min-detect-length', type=int, help='samples needed before detection runs')
    parser.add_argument('--max-buffer', type=int, help='trailing samples kept by online detection')


def config_from_args(args, **extra):
    """
    Build the detector configuration from parsed flags and the environment.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags, as added by :func:`add_config_arguments`.

    :rtype: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :return: The configuration.

    :raises InvalidConfiguration: If a value is out of range.
    """
    return DetectorConfig.from_env(alpha=args.alpha, fas_threshold=args.fas_threshold,
                                   bound_multiplier=args.multiplier, min_detect_length=args.min_detect_length,
                                   max_buffer=args.max_buffer, **extra)


def exit_code_for(error):
    """
    Map an expected failure to its exit code.

    :type error: Exception
    :param error: The failure.

    :rtype: int
    :return: 3 for a series too short, 2 for any other input or configuration error.
    """
    if isinstance(error, SeriesTooShort):
        return Constants.EXIT_SERIES_TOO_SHORT
    return Constants.EXIT_INPUT_ERROR


EXPECTED_ERRORS = (AnomalyDetectionError, OSError)
