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
from pytsanomaly.files.index_file import read_indices
from pytsanomaly.files.report_document import loads_document
from pytsanomaly.model.errors import InvalidConfiguration
from pytsanomaly.scoring import confusion, f1

logger = getLogger(__name__)
basicConfig(level=INFO)


def format_scores(counts):
    """
    Render confusion counts and their F1 score on one line.

    :type counts: :py:class:`pytsanomaly.scoring.ConfusionCounts`
    :param counts: The counts.

    :rtype: str
    :return: `tp=.. tn=.. fp=.. fn=.. f1=x.xxxxxx`.
    """
    return '{} f1={:.6f}'.format(counts, f1(counts))


def load_predictions(path, from_report):
    """
    Load predicted indices from an index file or from the anomalies of a report document.

    :rtype: tuple
    :return: The indices and the series length recorded in the report, or None for an index file.
    """
    if not from_report:
        return read_indices(path), None
    with open(path, encoding='utf-8') as f:
        document = loads_document(f.read())
    return document.anomalies, document.series_length


def add_arguments(parser):
    parser.add_argument('predictions', help='predicted indices, one per line')
    parser.add_argument('truth', help='true indices, one per line')
    parser.add_argument('--length', type=int, help='series length; taken from the report with --from-report')
    parser.add_argument('--tolerance', type=int, default=Constants.OFFLINE_TOLERANCE)
    parser.add_argument('--from-report', action='store_true', help='read predictions from a report document')


def run(args):
    """
    Score predictions against truth and print the counts and F1.

    :type args: :py:class:`argparse.Namespace`
    :param args: Parsed flags.

    :rtype: int
    :return: The exit code.
    """
    try:
        predicted, length = load_predictions(args.predictions, args.from_report)
        length = args.length if args.length is not None else length
        if length is None:
            raise InvalidConfiguration('--length is required unless predictions come from a report.')
        counts = confusion(predicted, read_indices(args.truth), length, args.tolerance)
        print(format_scores(counts))
        return Constants.EXIT_SUCCESS
    except EXPECTED_ERRORS as e:
        logger.error('Unable to evaluate predictions: {}'.format(e))
        return exit_code_for(e)
    except Exception as e:
        logger.exception('Unable to evaluate predictions.')
        raise e


def main(argv=None):
    """
    Score predicted anomaly indices against ground truth.
    """
    parser = ArgumentParser(description=main.__doc__.strip())
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == '__main__':
    raise SystemExit(main())
