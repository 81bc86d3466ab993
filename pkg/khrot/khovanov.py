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

Khovanov complexes of tangles and links given by PD codes.

A PD code lists crossings X(a, b, c, d): the edge labels around the crossing counterclockwise, starting with the
incoming under strand, so the under strand runs a -> c. The over strand runs d -> b when the crossing is positive
and b -> d otherwise; the sign comes from the usual label rule.

The computation glues one crossing complex at a time into the running tangle with a planar arc diagram,
reducing after every step, and closes the tangle with curls at the end. `cube_oracle` computes the same table
from the full cube of resolutions and shares nothing with the pipeline but the table type.
"""

__all__ = ['PDCode', 'PlanStep', 'CompositionPlan', 'parse_pd', 'crossing_complex', 'plan_composition', 'kh',
           'execute_plan', 'cube_oracle', 'two_line_check', 'one_strand_check', 'unnormalized_jones',
           'require_alternating']
__author__ = "khrot contributors"

import logging
import re

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Tuple

import sympy

from khrot.components.exceptions import *
from khrot.components.helpers import UnionFind, first_or_none, rotate_to_front
from khrot.cobordism import saddle
from khrot.complex import Complex, HomologyTable, homology_ranks, reduce
from khrot.planar import PlanarArcDiagram, classify, compose_complexes, unary_basic
from khrot.smoothing import EMPTY, OrientedSmoothing, ShiftedSmoothing, make_smoothing


logger = logging.getLogger()

# Slots of X(a, b, c, d)
A, B, C, D = range(4)


@dataclass(frozen=True)
class PDCode:
    """
    :param crossings:   Tuples (a, b, c, d) of edge labels.
    :param tangle:      Allow labels that occur once: the open ends of a tangle.
    """

    crossings: Tuple[Tuple[int, int, int, int], ...]
    tangle: bool = False


    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(tuple(int(x) for x in c) for c in self.crossings))
        for c in self.crossings:
            if len(c) != 4:
                raise PDLabelException(f"A crossing has four labels, got {c}")

        counts = Counter(x for c in self.crossings for x in c)
        for label, n in sorted(counts.items()):
            if n > 2 or (n == 1 and not self.tangle):
                raise PDLabelException(f"Label {label} occurs {n} times")

        self._check_flow()


    def _check_flow(self):
        entries, exits = Counter(), Counter()
        for i, c in enumerate(self.crossings):
            over_in = self.over_entry[i]
            entries.update([c[A], c[over_in]])
            exits.update([c[C], c[B if over_in == D else D]])
        for label in set(entries) | set(exits):
            if entries[label] > 1 or exits[label] > 1:
                raise PDLabelException(f"Edge {label} does not leave one crossing slot and enter another")


    def __len__(self):
        return len(self.crossings)


    @cached_property
    def signs(self) -> Tuple[int, ...]:
        """ +1 for a positive crossing: j - l = 1 or l - j > 1 for X(i, j, k, l). """

        return tuple(1 if (c[B] - c[D] == 1 or c[D] - c[B] > 1) else -1 for c in self.crossings)


    @cached_property
    def over_entry(self) -> Tuple[int, ...]:
        return tuple(D if s > 0 else B for s in self.signs)


    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)


    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)


    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus


    @cached_property
    def occurrences(self) -> Dict[int, List[Tuple[int, int]]]:
        """ label -> [(crossing, slot), ...] """

        result = defaultdict(list)
        for i, c in enumerate(self.crossings):
            for slot, label in enumerate(c):
                result[label].append((i, slot))
        return dict(result)


    @property
    def open_labels(self) -> List[int]:
        return sorted(label for label, where in self.occurrences.items() if len(where) == 1)


    @property
    def is_alternating(self) -> bool:
        """ Every edge goes from an under slot to an over slot. """

        return all(where[0][1] % 2 != where[1][1] % 2 for where in self.occurrences.values() if len(where) == 2)


    def components(self) -> List['PDCode']:
        """ Split the diagram into connected pieces, crossings kept in their order. """

        uf = UnionFind(range(len(self.crossings)))
        for where in self.occurrences.values():
            if len(where) == 2:
                uf.union(where[0][0], where[1][0])
        return [PDCode(tuple(self.crossings[i] for i in sorted(group)), self.tangle) for group in uf.groups()]


    @cached_property
    def phases(self) -> Tuple[int, ...]:
        """
        For every crossing, 0 when the under slots a and c are the `In` points of its disc and 1 when b and d are.
        The two ends of each edge must get opposite flags. Alternating diagrams get phase 0 everywhere.

        :raises UnplannableException: if there is no consistent assignment.
        """

        phases = {}
        for start in range(len(self.crossings)):
            if start in phases:
                continue
            phases[start] = 0
            queue = [start]
            while queue:
                i = queue.pop()
                for slot, label in enumerate(self.crossings[i]):
                    for j, other in self.occurrences[label]:
                        if (j, other) == (i, slot):
                            continue
                        # In(i, slot) differs from In(j, other)
                        wanted = (phases[i] + slot + other + 1) % 2
                        if j not in phases:
                            phases[j] = wanted
                            queue.append(j)
                        elif phases[j] != wanted:
                            raise UnplannableException(f"No consistent In/Out flags at edge {label}")

        return tuple(phases[i] for i in range(len(self.crossings)))


    def port_labels(self, i: int) -> List[int]:
        """ Labels at the boundary points 0..3 of the disc around crossing i. """

        phase = self.phases[i]
        return [self.crossings[i][(p + phase) % 4] for p in range(4)]


    def __str__(self):
        return "PD[" + ",".join(f"X({','.join(str(x) for x in c)})" for c in self.crossings) + "]"


_PD_HEAD = re.compile(r"\s*PD\s*\[\s*")
_PD_CROSSING = re.compile(r"X\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")
_PD_SEPARATOR = re.compile(r",\s*")
_PD_TAIL = re.compile(r"\]\s*$")


def parse_pd(text: str, tangle: bool = False) -> PDCode:
    """
    Read ``PD[X(a,b,c,d), ...]``. Whitespace is allowed between tokens.

    :raises PDSyntaxException: with the offending character position.
    :raises PDLabelException:  if a label occurs more than twice, or once outside tangle mode,
                               or an edge does not run from one slot to another.
    """

    match = _PD_HEAD.match(text)
    if not match:
        raise PDSyntaxException(f"Expected 'PD[' at position 0 of {text!r}", position=0)
    position = match.end()

    crossings = []
    while True:
        tail = _PD_TAIL.match(text, position)
        if tail and tail.end() == len(text):
            break
        if crossings:
            separator = _PD_SEPARATOR.match(text, position)
            if not separator:
                raise PDSyntaxException(f"Expected ',' or ']' at position {position} of {text!r}", position=position)
            position = separator.end()
        crossing = _PD_CROSSING.match(text, position)
        if not crossing:
            raise PDSyntaxException(f"Expected 'X(a,b,c,d)' at position {position} of {text!r}", position=position)
        crossings.append(tuple(int(x) for x in crossing.groups()))
        position = crossing.end()

    return PDCode(tuple(crossings), tangle)


def _crossing_smoothings(phase: int) -> Tuple[OrientedSmoothing, OrientedSmoothing]:
    point = {(p + phase) % 4: p for p in range(4)}

    def smoothing(pairs):
        points = [(point[x], point[y]) for x, y in pairs]
        return make_smoothing(2, [(x, y) if x % 2 == 0 else (y, x) for x, y in points])

    return smoothing([(A, B), (C, D)]), smoothing([(A, D), (B, C)])


def crossing_complex(sign: int, phase: int = 0) -> Complex:
    """
    Complex of one crossing: the 0-smoothing joins a-b and c-d, the 1-smoothing joins a-d and b-c,
    the differential is the saddle between them.

    Negative crossing: 0-smoothing{-2} in degree -1, 1-smoothing{-1} in degree 0.
    Positive crossing: 0-smoothing{+1} in degree 0, 1-smoothing{+2} in degree 1.

    Only phase 0 is diagonal. In phase 1 the smoothings swap rotation numbers, so 2r minus the shifted rotation is
    -3/2 and 1/2 on a positive crossing, -1/2 and 3/2 on a negative one. Non-alternating diagrams need phase 1.

    :param phase: 0 when the points a and c are `In` (point p is slot p), 1 when b and d are (point p is slot p+1).
    """

    if sign not in (1, -1) or phase not in (0, 1):
        raise KhrotException(f"Bad crossing sign {sign} or phase {phase}")

    zero, one = _crossing_smoothings(phase)
    r, q = (-1, -2) if sign < 0 else (0, 1)
    objects = {r: [ShiftedSmoothing(zero, q)], r + 1: [ShiftedSmoothing(one, q + 1)]}
    return Complex(zero.boundary, objects, {r: {(0, 0): saddle(zero, one)}})


@dataclass(frozen=True)
class PlanStep:
    """
    :param kind:        `start` (the first crossing), `join` (glue a crossing on) or `close` (a curl).
    :param diagram:     The planar diagram of the step, None for `start`.
    :param crossing:    Index of the crossing added by `start` and `join`.
    :param ports:       Edge labels on the boundary of the running tangle after the step.
    """

    kind: str
    diagram: Optional[PlanarArcDiagram]
    crossing: Optional[int]
    ports: Tuple[int, ...]


@dataclass(frozen=True)
class CompositionPlan:
    parts: Tuple[Tuple[PlanStep, ...], ...]
    closed: bool
    final: Optional[PlanarArcDiagram] = None

    @property
    def steps(self) -> List[PlanStep]:
        return [step for part in self.parts for step in part]


def _close_curls(ports: List[int], steps: List[PlanStep], close: bool,
                 keep_open: frozenset = frozenset()) -> List[int]:
    while True:
        n = len(ports)
        position = first_or_none(range(n), lambda p: n >= 2 and ports[p] == ports[(p + 1) % n]
                                                    and ports[p] not in keep_open)
        if position is None or (n == 2 and not close):
            return ports

        if n == 2:
            position = 1
        sign = 1 if position % 2 else -1
        diagram = unary_basic(n // 2, position, sign)
        remaining = [(position + 2 + m) % n for m in range(n - 2)]
        if position % 2:
            remaining = rotate_to_front(remaining, 1)
        ports = [ports[p] for p in remaining]
        steps.append(PlanStep('close', diagram, None, tuple(ports)))


def _best_run(pd: PDCode, ports: List[int], remaining: List[int],
              keep_open: frozenset = frozenset()) -> Optional[Tuple[int, int, int, int]]:
    """
    The longest run of ports t, t+1, ... (counterclockwise on the tangle) carrying the labels of points
    x, x-1, ... (clockwise on one crossing). Ties go to the earliest crossing, then the earliest ports.
    Labels in `keep_open` are never glued.

    :return: (length, crossing, t, x) or None.
    """

    n = len(ports)
    counts = Counter(ports)
    best = None
    for crossing in remaining:
        labels = pd.port_labels(crossing)
        for t in range(n):
            for x in range(4):
                m = 0
                while m < min(n, 4):
                    label = ports[(t + m) % n]
                    if (label != labels[(x - m) % 4] or counts[label] != 1 or labels.count(label) != 1
                            or label in keep_open):
                        break
                    m += 1
                if m and (best is None or m > best[0]):
                    best = (m, crossing, t, x)
    return best


def _join(pd: PDCode, ports: List[int], crossing: int, m: int, t: int, x: int) -> Tuple[PlanarArcDiagram, List[int]]:
    n = len(ports)
    labels = pd.port_labels(crossing)
    if m == n == 4:
        m -= 1

    arcs = []
    for i in range(m):
        tp, xp = (t + i) % n, (x - i) % 4
        arcs.append(((1, tp), (2, xp)) if tp % 2 else ((2, xp), (1, tp)))

    ring = [(1, (t + m + i) % n) for i in range(n - m)] + [(2, (x + 1 + i) % 4) for i in range(4 - m)]
    if ring and ring[0][1] % 2:
        ring = rotate_to_front(ring, 1)
    for o, (disc, p) in enumerate(ring):
        arcs.append(((0, o), (disc, p)) if p % 2 == 0 else ((disc, p), (0, o)))

    diagram = PlanarArcDiagram(len(ring) // 2, (n // 2, 2), tuple(arcs))
    return diagram, [ports[p] if disc == 1 else labels[p] for disc, p in ring]


def _plan_part(pd: PDCode, order: List[int], close: bool,
               keep_open: frozenset = frozenset()) -> Tuple[PlanStep, ...]:
    remaining = list(order)
    first = remaining.pop(0)
    ports = pd.port_labels(first)
    steps = [PlanStep('start', None, first, tuple(ports))]
    ports = _close_curls(ports, steps, close and not remaining, keep_open)

    while remaining:
        best = _best_run(pd, ports, remaining, keep_open)
        if best is None:
            raise UnplannableException(f"Crossings {remaining} are not connected to the rest of {pd}")
        m, crossing, t, x = best
        diagram, ports = _join(pd, ports, crossing, m, t, x)
        remaining.remove(crossing)
        steps.append(PlanStep('join', diagram, crossing, tuple(ports)))
        ports = _close_curls(ports, steps, close and not remaining, keep_open)

    return tuple(steps)


def plan_composition(pd: PDCode, close: bool = None) -> CompositionPlan:
    """
    Order the crossings greedily: start from the first, then always glue on the crossing that shares the longest
    run of edges with the running boundary. Adjacent boundary points on one edge are closed with a curl as soon
    as they appear. A join never closes the boundary completely; the last curl does.

    :param close:   Close links down to no boundary (the default for links). Without it a link is cut open at
                    its highest edge label: that edge is never glued nor curled, so the plan ends with the
                    two ports of that label. A tangle keeps its open ends.
    :raises UnplannableException: for a disconnected tangle or for closing a tangle with open ends.
    """

    if close is None:
        close = not pd.open_labels
    if close and pd.open_labels:
        raise UnplannableException(f"Cannot close a tangle with open ends {pd.open_labels}")
    if not pd.crossings:
        return CompositionPlan((), True)

    uf = UnionFind(range(len(pd.crossings)))
    for where in pd.occurrences.values():
        if len(where) == 2:
            uf.union(where[0][0], where[1][0])
    groups = uf.groups()

    if len(groups) > 1:
        if not close:
            raise UnplannableException(f"{pd} is split into {len(groups)} pieces")
        logger.info(f"{pd} is split, planning {len(groups)} pieces side by side")

    keep_open = frozenset() if close or pd.open_labels else frozenset([max(pd.occurrences)])
    parts = [_plan_part(pd, sorted(group), close, keep_open) for group in groups]
    final = PlanarArcDiagram.juxtaposition(len(parts)) if len(parts) > 1 else None
    return CompositionPlan(tuple(parts), close, final)


def execute_plan(pd: PDCode, plan: CompositionPlan, stats: Dict = None,
                 check: bool = False) -> Tuple[Complex, Fraction]:
    """
    Run the plan, reducing after every step.

    :param stats:   Optional counter receiving `compositions`, `deloops` and `eliminations`.
    :param check:   Validate the complex after every deloop and elimination.
    :return:        The reduced complex and the rotation constant it has when the diagram is alternating:
                    the sum of the crossing constants minus the R_D of every diagram used.
    """

    stats = stats if stats is not None else defaultdict(int)

    def step_reduce(c: Complex) -> Complex:
        journal = []
        result = reduce(c, journal, check=check)
        stats['compositions'] += 1
        stats['deloops'] += sum(1 for x in journal if x['event'] == 'deloop')
        stats['eliminations'] += sum(1 for x in journal if x['event'] == 'eliminate')
        return result

    if not plan.parts:
        return Complex.single(ShiftedSmoothing(EMPTY, 0)), Fraction(0)

    results, predicted = [], Fraction(0)
    for part in plan.parts:
        current = None
        for step in part:
            if step.kind == 'start':
                current = crossing_complex(pd.signs[step.crossing], pd.phases[step.crossing])
                predicted += Fraction(1, 2) * -pd.signs[step.crossing]
            elif step.kind == 'join':
                piece = crossing_complex(pd.signs[step.crossing], pd.phases[step.crossing])
                current = step_reduce(compose_complexes(step.diagram, [current, piece]))
                predicted += Fraction(1, 2) * -pd.signs[step.crossing] - classify(step.diagram).rotation
            else:
                current = step_reduce(compose_complexes(step.diagram, [current]))
                predicted -= classify(step.diagram).rotation
            logger.debug(f"After {step.kind} the complex has {current.size()} objects, boundary {step.ports}")
        results.append(current)

    if plan.final is not None:
        return step_reduce(compose_complexes(plan.final, results)), predicted
    return results[0], predicted


def kh(pd: PDCode, close: bool = None, stats: Dict = None) -> Complex:
    """
    The reduced Khovanov complex of the diagram, built crossing by crossing.
    For a link with `close` left on, the result has no boundary and its objects are all the empty smoothing.
    """

    plan = plan_composition(pd, close)
    logger.info(f"Computing {pd} in {len(plan.steps)} steps")
    return execute_plan(pd, plan, stats)[0]


def require_alternating(pd: PDCode):
    """ :raises NotAlternatingException: unless every edge of `pd` goes from an under slot to an over slot. """

    if not pd.is_alternating:
        raise NotAlternatingException(f"{pd} is not alternating, rotation constants are only defined for "
                                      f"alternating diagrams")


def _circles(pd: PDCode, state: Tuple[int, ...]) -> List[frozenset]:
    uf = UnionFind(sorted({x for c in pd.crossings for x in c}))
    for c, s in zip(pd.crossings, state):
        if s == 0:
            uf.union(c[A], c[B])
            uf.union(c[C], c[D])
        else:
            uf.union(c[A], c[D])
            uf.union(c[B], c[C])
    return sorted((frozenset(group) for group in uf.groups()), key=min)


def cube_oracle(pd: PDCode, stats: Dict = None) -> HomologyTable:
    """
    Khovanov homology from the cube of resolutions over the rationals. Every circle carries V = <1, X>
    with deg 1 = +1 and deg X = -1. Merging multiplies (1*1 = 1, 1*X = X, X*X = 0), splitting comultiplies
    (1 -> 1⊗X + X⊗1, X -> X⊗X). The edge flipping crossing c has sign (-1)^(number of 1s before c).
    Gradings: i = h - n₋, j = deg + h + n₊ - 2n₋.

    :raises NotClosedException: if the code has open ends.
    """

    if pd.open_labels:
        raise NotClosedException(f"The cube needs a link, {pd} has open ends")

    n = len(pd.crossings)
    circles = {}
    basis = {}

    for state in product((0, 1), repeat=n):
        circles[state] = _circles(pd, state)
        elements = list(product((0, 1), repeat=len(circles[state])))
        h = sum(state)
        basis[state] = [(element, sum(1 if x == 0 else -1 for x in element) + h + pd.n_plus - 2 * pd.n_minus)
                        for element in elements]
        if stats is not None:
            stats['cube_vertices'] += 1

    # position of every element inside its (h, j) space
    index, dims = {}, defaultdict(int)
    for state, elements in basis.items():
        h = sum(state)
        for element, j in elements:
            index[(state, element)] = dims[(h, j)]
            dims[(h, j)] += 1

    maps = defaultdict(dict)
    for state in basis:
        h = sum(state)
        source_circles = circles[state]
        for c in range(n):
            if state[c]:
                continue
            target = state[:c] + (1,) + state[c + 1:]
            sign = -1 if sum(state[:c]) % 2 else 1
            target_circles = circles[target]
            where = {x: i for i, circle in enumerate(target_circles) for x in circle}

            for element, j in basis[state]:
                image = _edge_image(source_circles, target_circles, where, element)
                for target_element, value in image.items():
                    key = (index[(target, target_element)], index[(state, element)])
                    matrix = maps[(h, j)]
                    matrix[key] = matrix.get(key, 0) + sign * value

    table = {}
    for j in sorted({j for _, j in dims}):
        local_dims = {h: dims[(h, j)] for h in range(n + 1) if dims.get((h, j))}
        local_maps = {h: {key: Fraction(v) for key, v in maps[(h, j)].items() if v}
                      for h in local_dims if (h, j) in maps}
        for h, dim in homology_ranks(local_dims, local_maps).items():
            table[(h - pd.n_minus, j)] = dim

    return HomologyTable(table)


def _edge_image(source: List[frozenset], target: List[frozenset], where: Dict[int, int],
                element: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """ Image of one basis element under the merge or split of an edge, as {element: coefficient}. """

    bits = [None] * len(target)
    incoming = defaultdict(list)
    split = None
    for i, circle in enumerate(source):
        images = sorted({where[x] for x in circle})
        if len(images) == 2:
            split = (element[i], images)
        else:
            incoming[images[0]].append(element[i])

    for t, values in incoming.items():
        if len(values) == 2 and values[0] and values[1]:
            return {}
        bits[t] = sum(values)

    if split is None:
        return {tuple(bits): 1}

    value, (first, second) = split
    if value:
        bits[first] = bits[second] = 1
        return {tuple(bits): 1}

    result = {}
    for a, b in ((0, 1), (1, 0)):
        bits[first], bits[second] = a, b
        result[tuple(bits)] = 1
    return result


def unnormalized_jones(pd: PDCode):
    """
    (q + 1/q) times the Jones polynomial as a state sum:
    (-1)^n₋ q^(n₊ - 2n₋) * sum over states of (-q)^h (q + 1/q)^(circles).
    """

    q = sympy.Symbol('q')
    total = sympy.Integer(0)
    for state in product((0, 1), repeat=len(pd.crossings)):
        total += (-q) ** sum(state) * (q + 1 / q) ** len(_circles(pd, state))
    return sympy.expand((-1) ** pd.n_minus * q ** (pd.n_plus - 2 * pd.n_minus) * total)


def two_line_check(table: HomologyTable) -> Optional[int]:
    """
    The constant K with j - 2i in {K - 1, K + 1} for every nonzero entry, or None.
    A single diagonal gives K = (j - 2i) - 1, the empty table K = 0.
    """

    values = sorted({j - 2 * i for (i, j), _ in table.items()})
    if not values:
        return 0
    if len(values) == 1:
        return values[0] - 1
    if len(values) == 2 and values[1] - values[0] == 2:
        return values[0] + 1
    return None


def one_strand_check(c: Complex) -> Optional[int]:
    """
    For a complex with one boundary strand: the constant K with q = 2r + K for every object of the reduced form,
    or None if some object is not a single strand or no such constant exists.

    :raises IncompatibleException: if the boundary is not a single strand.
    """

    if c.boundary.k != 1:
        raise IncompatibleException(f"Expected one boundary strand, got k={c.boundary.k}")

    values = set()
    for r, objs in reduce(c).objects.items():
        for x in objs:
            if x.smoothing.loops:
                return None
            values.add(x.q - 2 * r)
    return values.pop() if len(values) == 1 else None
