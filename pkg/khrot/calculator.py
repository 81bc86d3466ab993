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
"""

__all__ = ['Calculator', 'Outcome']
__author__ = "khrot contributors"

import json
import logging
import random

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from khrot.app import Processor
from khrot.components.benchmark import benchmark
from khrot.components.decorators import logging_wrapper
from khrot.components.exceptions import *
from khrot.complex import (CoherenceReport, Complex, HomologyTable, homology_table, is_coherently_diagonal,
                           is_diagonal, reduce)
from khrot.khovanov import (PDCode, crossing_complex, cube_oracle, execute_plan, parse_pd, plan_composition,
                            require_alternating, two_line_check, unnormalized_jones)
from khrot.planar import binary_basic, classify, compose_complexes, compose_smoothings, set_rotation_check, \
    unary_basic
from khrot.smoothing import all_smoothings, rotation_number


logger = logging.getLogger()


@dataclass(frozen=True)
class Outcome:
    """ Exit status (0 success, 1 failed check, 2 bad input) and the text to print. """

    status: int
    output: str


class Calculator(Processor):
    """
    Runs one command on one diagram. The ``event`` passed to ``__call__`` looks like::

        {'command': 'compute', 'pd': 'PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]', 'tangle': False}

    Commands: `compute`, `oracle`, `check-diagonal`, `check-coherent`, `check-two-lines`, `reduce`, `jones`
    and `check-random` (which takes `count` and `seed` instead of `pd`).
    Statistics of the reduction (`compositions`, `deloops`, `eliminations`, `cube_vertices`) pile up in `stats`.
    """

    DEFAULT_CONFIG = {
        'output_format':     'tsv',
        'verify':            False,
        'max_closure_depth': None,
        'seed':              0,
        'property_examples': 200,
        'check_rotation':    False,
    }


    def __init__(self, custom_config: Dict = None, **kwargs):
        super().__init__(custom_config=custom_config, **kwargs)

        if self.config.get('check_rotation'):
            set_rotation_check(True)


    def __call__(self, event: Dict) -> Outcome:
        super().__call__(event)

        command = event.get('command', 'compute')
        handlers = {
            'compute':         self._compute_command,
            'oracle':          self._oracle_command,
            'check-diagonal':  self._diagonal_command,
            'check-coherent':  self._coherent_command,
            'check-two-lines': self._two_lines_command,
            'reduce':          self._reduce_command,
            'jones':           self._jones_command,
            'check-random':    self._random_command,
        }
        if command not in handlers:
            return Outcome(2, f"Unknown command {command}")

        try:
            if command == 'check-random':
                return handlers[command](event)
            pd = self.parse(event.get('pd', ''), tangle=event.get('tangle', False))
            if command == 'reduce':
                return self._reduce_command(pd, dump=event.get('dump', False))
            return handlers[command](pd)
        except KhrotException as err:
            logger.warning(f"Bad input for {command}: {err}")
            return Outcome(2, f"error: {err}")
        except Exception:
            self.die(f"{command} failed")


    @benchmark
    def parse(self, text: str, tangle: bool = False) -> PDCode:
        return parse_pd(text, tangle=tangle)


    @benchmark
    @logging_wrapper(logging.INFO)
    def compute(self, pd: PDCode) -> HomologyTable:
        """ Homology table of a link through the crossing by crossing pipeline. """

        c, _ = execute_plan(pd, plan_composition(pd, close=True), self.stats)
        return homology_table(c)


    @benchmark
    def oracle(self, pd: PDCode) -> HomologyTable:
        return cube_oracle(pd, self.stats)


    @benchmark
    def tangle_complex(self, pd: PDCode) -> Complex:
        """ The reduced complex of a tangle; a link is cut open at its highest edge label and keeps one strand. """

        c, predicted = execute_plan(pd, plan_composition(pd, close=False), self.stats)
        logger.info(f"Rotation constant predicted for {pd}: {predicted}")
        return c


    @benchmark
    def check_diagonal(self, pd: PDCode) -> Optional[Fraction]:
        require_alternating(pd)
        return is_diagonal(self.tangle_complex(pd))


    @benchmark
    def check_coherent(self, pd: PDCode) -> CoherenceReport:
        require_alternating(pd)
        return is_coherently_diagonal(self.tangle_complex(pd), self.config.get('max_closure_depth'))


    def _format_table(self, table: HomologyTable) -> str:
        if self.config['output_format'] == 'json':
            return table.to_json() + "\n"
        return table.to_tsv()


    def _compute_command(self, pd: PDCode) -> Outcome:
        table = self.compute(pd)
        output = self._format_table(table)
        if self.config.get('verify'):
            expected = self.oracle(pd)
            if expected != table:
                logger.error(f"Pipeline and cube disagree on {pd}: {table} != {expected}")
                return Outcome(1, output + f"verification failed: cube gives {expected}\n")
            output += "verified against the cube of resolutions\n"
        return Outcome(0, output)


    def _oracle_command(self, pd: PDCode) -> Outcome:
        return Outcome(0, self._format_table(self.oracle(pd)))


    def _diagonal_command(self, pd: PDCode) -> Outcome:
        constant = self.check_diagonal(pd)
        if constant is None:
            return Outcome(1, "not diagonal\n")
        return Outcome(0, f"C = {constant}\n")


    def _coherent_command(self, pd: PDCode) -> Outcome:
        report = self.check_coherent(pd)
        lines = [f"constant: {report.constant}", f"closures checked: {report.checked}"]
        if not report:
            lines.append("failing closure sequence: " + " ".join(f"(k={k}, at={p}, sign={s:+d})"
                                                                 for k, p, s in report.witness))
            return Outcome(1, "\n".join(lines) + "\n")
        lines.append("coherently diagonal")
        return Outcome(0, "\n".join(lines) + "\n")


    def _two_lines_command(self, pd: PDCode) -> Outcome:
        k = two_line_check(self.compute(pd))
        if k is None:
            return Outcome(1, "not supported on two lines\n")
        return Outcome(0, f"K = {k}\n")


    def _reduce_command(self, pd: PDCode, dump: bool = False) -> Outcome:
        if pd.open_labels:
            c = self.tangle_complex(pd)
        else:
            c, _ = execute_plan(pd, plan_composition(pd, close=True), self.stats)
        if dump:
            return Outcome(0, c.dump() + "\n")
        lines = [f"[{r}] " + ", ".join(str(x) for x in objs) for r, objs in c.objects.items()]
        return Outcome(0, "\n".join(lines) + "\n")


    def _jones_command(self, pd: PDCode) -> Outcome:
        state_sum = unnormalized_jones(pd)
        euler = self.compute(pd).euler_characteristic()
        agree = (state_sum - euler).expand() == 0
        output = f"state sum: {state_sum}\neuler characteristic: {euler}\n"
        return Outcome(0 if agree else 1, output + ("agree\n" if agree else "disagree\n"))


    def _random_command(self, event: Dict) -> Outcome:
        count = int(event.get('count') or self.config['property_examples'])
        seed = int(event.get('seed') if event.get('seed') is not None else self.config['seed'])
        summary = self.check_random(count, seed)
        status = 0 if not (summary['diagonal_failures'] or summary['rotation_failures']) else 1
        return Outcome(status, json.dumps(summary, sort_keys=True) + "\n")


    @benchmark
    def check_random(self, count: int, seed: int = 0) -> Dict:
        """
        Random alternating composites of crossing complexes glued with basic diagrams: each reduced result must
        be diagonal with the sum of the crossing constants minus the R_D of the diagrams used.
        Then five times as many random (diagram, smoothings) pairs for rotation additivity.
        """

        rng = random.Random(seed)
        diagonal_failures: List[str] = []
        for n in range(count):
            problem = self._random_composite(rng)
            if problem:
                diagonal_failures.append(f"#{n}: {problem}")

        rotation_failures: List[str] = []
        for n in range(5 * count):
            problem = _random_rotation_case(rng)
            if problem:
                rotation_failures.append(f"#{n}: {problem}")

        return {'seed': seed, 'composites': count, 'rotation_cases': 5 * count,
                'diagonal_failures': diagonal_failures, 'rotation_failures': rotation_failures}


    def _random_composite(self, rng: random.Random, max_crossings: int = 6, max_k: int = 4) -> Optional[str]:
        sign = rng.choice((1, -1))
        current, expected = crossing_complex(sign), Fraction(-sign, 2)
        history = [f"crossing {sign:+d}"]

        for _ in range(rng.randint(0, max_crossings - 1)):
            k = current.boundary.k
            if k >= 2 and (k >= max_k or rng.random() < 0.3):
                position = rng.randrange(2 * k)
                op = unary_basic(k, position, 1 if position % 2 else -1)
                current = reduce(compose_complexes(op, [current]))
                history.append(f"curl at {position}")
            else:
                sign = rng.choice((1, -1))
                p1 = rng.randrange(2 * k)
                p2 = rng.choice([p for p in range(4) if p % 2 != p1 % 2])
                op = binary_basic(k, 2, p1, p2)
                current = reduce(compose_complexes(op, [current, crossing_complex(sign)]))
                expected += Fraction(-sign, 2)
                history.append(f"join {sign:+d} at {p1}/{p2}")
            expected -= classify(op).rotation
            self.stats['compositions'] += 1

            found = is_diagonal(current)
            if found != expected:
                return f"{', '.join(history)}: constant {found}, expected {expected}"
        return None


def _random_rotation_case(rng: random.Random) -> Optional[str]:
    if rng.random() < 0.5:
        k = rng.randint(1, 3)
        position = rng.randrange(2 * k)
        op = unary_basic(k, position, 1 if position % 2 else -1)
    else:
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        p1 = rng.randrange(2 * k1)
        p2 = rng.choice([p for p in range(2 * k2) if p % 2 != p1 % 2])
        op = binary_basic(k1, k2, p1, p2)

    smoothings = [rng.choice(all_smoothings(k, [rng.choice((1, -1)) for _ in range(rng.randint(0, 2))]))
                  for k in op.input_ks]
    result = compose_smoothings(op, smoothings)
    expected = classify(op).rotation + sum((rotation_number(s) for s in smoothings), Fraction(0))
    if rotation_number(result) != expected:
        return f"{op.to_json()} on {[str(s) for s in smoothings]}: {rotation_number(result)} != {expected}"
    return None
