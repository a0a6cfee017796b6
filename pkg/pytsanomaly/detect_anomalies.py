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
from time import perf_counter

from pytsanomaly.command_options import add_config_arguments, config_from_args, exit_code_for, EXPECTED_ERRORS, \
    ON_OFF
from pytsanomaly.constants import Constants
from pytsanomaly.detection import detect_offline
from pytsanomaly.files.report_document import build_document, dumps_document
from pytsanomaly.files.series_reader import read_series, STDIN_PATH
from pytsanomaly.streaming import replay

logger = getLogger(__name__)
basicConfig(level=INFO)


def detect_document(series, config, mode, optimize=True, optimized_plan=False, period=None):
    """
    Run offline detection or an online replay over a series and build the report document.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to analyse.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :type mode: str
    :param mode: 'offline' or 'online'.

    :type optimize: bool
    :param optimize: Online only; skip samples inside the last signal band.

    :type optimized_plan: bool
    :param optimized_plan: Offline only; use the optimized aperiodic plan.

    :type period: int
    :param period: Offline only; period to use instead of detecting one.

    :rtype: dict
    :return: The report document.

    :raises SeriesTooShort: If an offline series has fewer than three samples.
    """
    start = perf_counter()
    if mode == Constants.MODE_OFFLINE:
        report = detect_offline(series, config, optimized_plan, period)
        document = build_document(report, mode, config, wall_time_seconds=perf_counter() - start)
        logger.info('Found {} anomaly(ies) in {} sample(s).'.format(len(report.anomalies), len(series)))
        return document

    if period is not None:
        logger.warning('The period override only applies offline; online detection ignores it.')
    decisions, state, runs = replay(series, config, optimize)
    anomalies = [decision.index for decision in decisions if decision.is_anomaly]
    document = build_document(state.last_report, mode, config.replace(optimize_runs=optimize), runs,
                              perf_counter() - start, anomalies)
    document['series_length'] = len(series)
    logger.info('Flagged {} anomaly(ies) in {} sample(s) with {} run(s).'.format(len(anomalies), len(series), runs))
    return document


def add_arguments(parser):
    parser.add_argument('input', nargs='?', default=STDIN_PATH, help="series file, or '-' for standard input")
    parser.add_argument('--mode', choices=(Constants.MODE_OFFLINE, Constants.MODE_ONLINE),
                        default=Constants.MODE_OFFLINE)
    parser.add_argument('--period', type=int, help='period to use instead of detecting one (offline)')
    parser.add_argument('--optimize', choices=ON_OFF, default='on', help='skip runs inside the last bounds (online)')
    parser.add_argument('--optimized-plan', action='store_true', help='fixed bucket count for aperiodic series')
    parser.add_argument('--output', help='report file; standard output when omitted')
    add_config_arguments(parser)


def run(args):
    """
    Detect anomalies in a series file and write the report document.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags.

    :rtype: int
    :return: The exit code; anomalies never change it.
    """
    try:
        config = config_from_args(args)
        series = read_series(args.input)
        document = detect_document(series, config, args.mode, args.optimize == 'on', args.optimized_plan,
                                   args.period)
        text = dumps_document(document)
        if args.output is None:
            print(text)
        else:
            with open(args.output, 'w', encoding='utf-8') as f:
                f.write(text + '\n')
            logger.info('Report written to {}.'.format(args.output))
        return Constants.EXIT_SUCCESS
    except EXPECTED_ERRORS as e:
        logger.error('Unable to detect anomalies: {}'.format(e))
        return exit_code_for(e)
    except Exception as e:
        logger.exception('Unable to detect anomalies.')
        raise e


def main(argv=None):
    """
    Detect anomalies in a series, offline or by online replay.
    """
    parser = ArgumentParser(description=main.__doc__.strip())
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == '__main__':
    raise SystemExit(main())
