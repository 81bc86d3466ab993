"""
..  hidden-code-block:: text
    :label: View Licence Agreement <br>

    khrot - Khovanov homology with rotation numbers

    The MIT License (MIT)
    Copyright (C) 2026  khrot contributors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
    SOFTWARE.

Usage::

    khrot compute --pd "PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]" --verify
    khrot check-diagonal --pd "PD[X(1,4,2,3)]" --tangle
    khrot compute --file khrot/data/corpus.tsv --format json

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
Log verbosity comes from the `KHROT_LOG_LEVEL` environment variable (default WARNING).
"""

__all__ = ['main', 'build_parser', 'read_corpus']
__author__ = "khrot contributors"

import argparse
import logging
import os
import sys

from typing import List, Sequence, Tuple

from khrot.calculator import Calculator


logger = logging.getLogger()

COMMANDS = ['compute', 'oracle', 'check-diagonal', 'check-coherent', 'check-two-lines', 'reduce', 'jones',
            'check-random']


def read_corpus(path: str) -> List[Tuple[str, str]]:
    """ Lines ``name<TAB>PD[...]``; blank lines and lines starting with # are skipped. """

    entries = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            name, _, code = line.partition('\t')
            entries.append((name.strip(), code.strip()))
    return entries


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='khrot', description='Khovanov homology with rotation numbers.')
    parser.add_argument('command', choices=COMMANDS)

    source = parser.add_mutually_exclusive_group()
    source.add_argument('--pd', help='Inline PD code, e.g. "PD[X(1,4,2,3)]"')
    source.add_argument('--file', help='Corpus file with one "name<TAB>PD[...]" per line')

    parser.add_argument('--tangle', action='store_true', help='Allow open ends (labels occurring once)')
    parser.add_argument('--format', dest='output_format', choices=['tsv', 'json'], default=None)
    parser.add_argument('--verify', action='store_true', help='Compare with the cube of resolutions')
    parser.add_argument('--dump', action='store_true', help='For `reduce`: print the complex as JSON')
    parser.add_argument('--max-depth', type=int, default=None, help='Longest closure sequence to check')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--count', type=int, default=None, help='Number of random composites for check-random')
    return parser


def main(argv: Sequence[str] = None) -> int:
    logging.basicConfig(level=os.environ.get('KHROT_LOG_LEVEL', 'WARNING').upper(),
                        format='%(levelname)s %(name)s: %(message)s')

    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command != 'check-random' and not (args.pd is not None or args.file):
        parser.print_usage(sys.stderr)
        print("error: one of --pd or --file is required", file=sys.stderr)
        return 2

    custom_config = {'verify': args.verify}
    if args.output_format:
        custom_config['output_format'] = args.output_format
    if args.max_depth is not None:
        custom_config['max_closure_depth'] = args.max_depth
    if args.seed is not None:
        custom_config['seed'] = args.seed

    calculator = Calculator(custom_config=custom_config)

    if args.command == 'check-random':
        outcome = calculator({'command': args.command, 'count': args.count, 'seed': args.seed})
        sys.stdout.write(outcome.output)
        return outcome.status

    if args.file:
        try:
            entries = read_corpus(args.file)
        except OSError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
    else:
        entries = [(None, args.pd)]

    status = 0
    for name, code in entries:
        outcome = calculator({'command': args.command, 'pd': code, 'tangle': args.tangle, 'dump': args.dump})
        if name is not None:
            sys.stdout.write(f"# {name}\n")
        if outcome.status == 2:
            sys.stderr.write(outcome.output.rstrip("\n") + "\n")
        else:
            sys.stdout.write(outcome.output)
        status = max(status, outcome.status)

    logger.info(f"Stats: {calculator.get_stats()}")
    return status


if __name__ == '__main__':
    sys.exit(main())
