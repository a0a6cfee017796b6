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

from pytsanomaly import __version__, benchmark_runs, detect_anomalies, evaluate_predictions, generate_dataset

COMMANDS = {
    'detect': detect_anomalies,
    'gen': generate_dataset,
    'eval': evaluate_predictions,
    'bench': benchmark_runs,
}


def build_parser():
    parser = ArgumentParser(prog='pytsanomaly', description='Time series anomaly detection.')
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, module in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=module.main.__doc__.strip(),
                                          description=module.main.__doc__.strip())
        module.add_arguments(subparser)
    return parser


def main(argv=None):
    """
    Dispatch to the command named by the first argument.

    :rtype: int
    :return: The exit code of the command.
    """
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command].run(args)


if __name__ == '__main__':
    raise SystemExit(main())
