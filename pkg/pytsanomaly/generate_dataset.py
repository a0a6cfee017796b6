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

from argparse import ArgumentParser
from logging import basicConfig, getLogger, INFO

from pytsanomaly.command_options import exit_code_for, EXPECTED_ERRORS
from pytsanomaly.constants import Constants
from pytsanomaly.files.index_file import write_indices
from pytsanomaly.files.series_reader import write_series
from pytsanomaly.synthetic_data import gen_breakout, gen_hetero_sine

logger = getLogger(__name__)
basicConfig(level=INFO)

KIND_SINE = 'sine'
KIND_BREAKOUT = 'breakout'


def generate(args):
    """
    Generate the labeled series described by the parsed flags.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags.

    :rtype: :py:class:`pytsanomaly.synthetic_data.LabeledSeries`
    :return: The series and its truth.
    """
    noise_sd = Constants.NOISE_SD if args.noise_sd is None else args.noise_sd
    if args.kind == KIND_SINE:
        return gen_hetero_sine(args.length or Constants.SINE_LENGTH, args.period, args.base_amplitude,
                               args.amplitude_growth, noise_sd, args.seed)
    return gen_breakout(args.length or Constants.BREAKOUT_LENGTH, args.break_index, args.level_shift, noise_sd,
                        args.seed)


def add_arguments(parser):
    parser.add_argument('kind', choices=(KIND_SINE, KIND_BREAKOUT))
    parser.add_argument('output', help='series file to write; the truth goes to <output>.truth')
    parser.add_argument('--length', type=int, help='number of samples')
    parser.add_argument('--period', type=int, default=Constants.SINE_PERIOD)
    parser.add_argument('--base-amplitude', type=float, default=Constants.SINE_BASE_AMPLITUDE)
    parser.add_argument('--amplitude-growth', type=float, default=Constants.SINE_AMPLITUDE_GROWTH)
    parser.add_argument('--break-index', type=int, default=Constants.BREAKOUT_INDEX)
    parser.add_argument('--level-shift', type=float, help='jump at the break; defaults to 100 times the noise')
    parser.add_argument('--noise-sd', type=float)
    parser.add_argument('--seed', type=int, default=Constants.DEFAULT_SEED)


def run(args):
    """
    Write a synthetic series and its truth file.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags.

    :rtype: int
    :return: The exit code.
    """
    try:
        labeled = generate(args)
        write_series(args.output, labeled.series)
        write_indices(args.output + Constants.TRUTH_FILE_SUFFIX, labeled.truth)
        logger.info('Wrote {} sample(s) to {} with {} true anomaly(ies).'
                    .format(len(labeled.series), args.output, len(labeled.truth)))
        return Constants.EXIT_SUCCESS
    except EXPECTED_ERRORS as e:
        logger.error('Unable to generate the dataset: {}'.format(e))
        return exit_code_for(e)
    except Exception as e:
        logger.exception('Unable to generate the dataset.')
        raise e


def main(argv=None):
    """
    Generate a synthetic benchmark series with a sidecar truth file.
    """
    parser = ArgumentParser(description=main.__doc__.strip())
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == '__main__':
    raise SystemExit(main())
