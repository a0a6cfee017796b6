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
from dataclasses import dataclass
from logging import basicConfig, getLogger, INFO
from time import perf_counter
from typing import FrozenSet

from pytsanomaly.command_options import add_config_arguments, config_from_args, exit_code_for, EXPECTED_ERRORS
from pytsanomaly.constants import Constants
from pytsanomaly.files.report_document import build_document, dumps_document
from pytsanomaly.files.series_reader import read_series, STDIN_PATH
from pytsanomaly.streaming import replay

logger = getLogger(__name__)
basicConfig(level=INFO)


@dataclass(frozen=True)
class BenchmarkResult:
    """
    Two replays of the same series, without and with run-occasion selection.
    """
    pushes: int
    runs_before: int
    runs_after: int
    seconds_before: float
    seconds_after: float
    anomalies_before: FrozenSet[int]
    anomalies_after: FrozenSet[int]

    @property
    def reduction(self):
        return 0.0 if self.runs_before == 0 else 1.0 - self.runs_after / self.runs_before

    @property
    def speedup(self):
        return 0.0 if self.seconds_after <= 0.0 else self.seconds_before / self.seconds_after

    @property
    def agreement(self):
        """
        Fraction of samples given the same verdict by both replays.
        """
        if self.pushes == 0:
            return 1.0
        return 1.0 - len(self.anomalies_before ^ self.anomalies_after) / self.pushes


def benchmark(series, config):
    """
    Replay a series with optimization off, then on, timing both.

    :type series: :py:class:`pytsanomaly.model.time_series.TimeSeries`
    :param series: The series to replay.

    :type config: :py:class:`pytsanomaly.model.detector_config.DetectorConfig`
    :param config: Detector settings.

    :rtype: tuple
    :return: The :py:class:`BenchmarkResult` and the final state of the optimized replay.
    """
    start = perf_counter()
    before, _, runs_before = replay(series, config, False)
    middle = perf_counter()
    after, state, runs_after = replay(series, config, True)
    end = perf_counter()
    result = BenchmarkResult(len(series), runs_before, runs_after, middle - start, end - middle,
                             frozenset(d.index for d in before if d.is_anomaly),
                             frozenset(d.index for d in after if d.is_anomaly))
    return result, state


def format_result(result):
    """
    Render a benchmark result, one measure per line.

    :rtype: str
    :return: The summary.
    """
    return '\n'.join([
        'pushes={}'.format(result.pushes),
        'runs_before={}'.format(result.runs_before),
        'runs_after={}'.format(result.runs_after),
        'reduction={:.3f}'.format(result.reduction),
        'seconds_before={:.3f}'.format(result.seconds_before),
        'seconds_after={:.3f}'.format(result.seconds_after),
        'speedup={:.2f}'.format(result.speedup),
        'anomalies_before={}'.format(sorted(result.anomalies_before)),
        'anomalies_after={}'.format(sorted(result.anomalies_after)),
        'agreement={:.6f}'.format(result.agreement),
    ])


def add_arguments(parser):
    parser.add_argument('input', nargs='?', default=STDIN_PATH, help="series file, or '-' for standard input")
    parser.add_argument('--output', help='also write the report of the optimized replay to this file')
    add_config_arguments(parser)


def run(args):
    """
    Compare online replays with and without run-occasion selection.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags.

    :rtype: int
    :return: The exit code.
    """
    try:
        config = config_from_args(args)
        series = read_series(args.input)
        result, state = benchmark(series, config)
        print(format_result(result))
        if args.output is not None:
            document = build_document(state.last_report, Constants.MODE_ONLINE, config.replace(optimize_runs=True),
                                      result.runs_after, result.seconds_after, result.anomalies_after)
            document['series_length'] = len(series)
            with open(args.output, 'w', encoding='utf-8') as f:
                f.write(dumps_document(document) + '\n')
        return Constants.EXIT_SUCCESS
    except EXPECTED_ERRORS as e:
        logger.error('Unable to run the benchmark: {}'.format(e))
        return exit_code_for(e)
    except Exception as e:
        logger.exception('Unable to run the benchmark.')
        raise e


def main(argv=None):
    """
    Measure the runs saved by skipping samples inside the last signal bounds.
    """
    parser = ArgumentParser(description=main.__doc__.strip())
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == '__main__':
    raise SystemExit(main())
