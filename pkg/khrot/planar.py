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

Planar arc diagrams: a disc with d input holes and non-crossing oriented arcs between marked points.
A diagram acts as a d-ary operation on smoothings, cobordisms and complexes.

Disc 0 is the output circle, discs 1..d are the inputs. On every circle the points are labelled 0..2k-1
counterclockwise and point 0 is `In` for the smoothing that sits there. An arc is stored as (tail, head),
each end a (disc, point) pair. The flow enters a smoothing at its `In` points, so arcs run from odd input points
to even input points, from even output points inwards and inwards to odd output points.

Faces are traced combinatorially: from a point follow its arc, then walk along the circle reached with the
region on the left (counterclockwise on the output circle, clockwise on the inputs) to the next point.
A face is positive when its arcs are traversed along their orientation.
"""

__all__ = ['PlanarArcDiagram', 'ArcClassification', 'make_diagram', 'classify', 'unary_basic', 'binary_basic',
           'compose_smoothings', 'trace_composition', 'compose_cobordisms', 'compose_complexes', 'object_tuples',
           'set_rotation_check']
__author__ = "khrot contributors"

import json
import logging
import os

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from khrot.components.exceptions import *
from khrot.components.helpers import UnionFind, rotate_to_front, to_bool
from khrot.cobordism import Component, MorphismCombo, from_terms, identity_cobordism
from khrot.complex import Complex, numerate
from khrot.smoothing import BoundaryConfig, OrientedSmoothing, ShiftedSmoothing, make_smoothing, rotation_number


logger = logging.getLogger()

Point = Tuple[int, int]
Arc = Tuple[Point, Point]

_check_rotation = to_bool(os.environ.get('KHROT_CHECK_ROTATION', 'false'))


def set_rotation_check(enabled: bool):
    """ Switch the rotation additivity assertion on every smoothing composition. """

    global _check_rotation
    _check_rotation = bool(enabled)


@dataclass(frozen=True)
class PlanarArcDiagram:
    """
    :param output_k:    Half the number of points on the output circle.
    :param input_ks:    Half the number of points on each input circle, discs 1..d.
    :param arcs:        Oriented arcs ((disc, point), (disc, point)), tail first.
    :param outer:       For a closed output (output_k = 0) with arcs: a point whose traced face is the unbounded one.
    """

    output_k: int
    input_ks: Tuple[int, ...]
    arcs: Tuple[Arc, ...]
    outer: Optional[Point] = None


    def __post_init__(self):
        object.__setattr__(self, 'input_ks', tuple(self.input_ks))
        object.__setattr__(self, 'arcs', tuple((tuple(a), tuple(b)) for a, b in self.arcs))
        if self.outer is not None:
            object.__setattr__(self, 'outer', tuple(self.outer))
        self._validate()


    @property
    def d(self) -> int:
        return len(self.input_ks)


    def size(self, disc: int) -> int:
        return 2 * (self.output_k if disc == 0 else self.input_ks[disc - 1])


    def points(self) -> List[Point]:
        return [(disc, p) for disc in range(self.d + 1) for p in range(self.size(disc))]


    @cached_property
    def partner(self) -> Dict[Point, Point]:
        result = {}
        for tail, head in self.arcs:
            result[tail] = head
            result[head] = tail
        return result


    @cached_property
    def arc_at(self) -> Dict[Point, int]:
        return {x: i for i, arc in enumerate(self.arcs) for x in arc}


    @cached_property
    def tails(self) -> frozenset:
        return frozenset(tail for tail, _ in self.arcs)


    def step(self, x: Point) -> Point:
        """ Next point along the circle of `x`, keeping the region on the left. """

        disc, p = x
        n = self.size(disc)
        return (disc, (p + 1) % n) if disc == 0 else (disc, (p - 1) % n)


    @cached_property
    def faces(self) -> List[Tuple[Point, ...]]:
        """ Every face as the cycle of points from which its arcs are followed. """

        seen, result = set(), []
        for x in sorted(self.partner):
            if x in seen:
                continue
            cycle = []
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.step(self.partner[x])
            result.append(tuple(cycle))
        return result


    @cached_property
    def face_of(self) -> Dict[Point, int]:
        return {x: f for f, cycle in enumerate(self.faces) for x in cycle}


    def face_sign(self, face: int) -> int:
        return 1 if self.faces[face][0] in self.tails else -1


    def is_juxtaposition(self) -> bool:
        return self.output_k == 0 and not self.arcs and all(k == 0 for k in self.input_ks)


    def _validate(self):
        for k in (self.output_k,) + self.input_ks:
            BoundaryConfig(k)

        used = [x for arc in self.arcs for x in arc]
        for disc, p in used:
            if not 0 <= disc <= self.d or not 0 <= p < self.size(disc):
                raise DiagramException(f"Arc end {(disc, p)} is not a point of the diagram")
        if len(set(used)) != len(used) or len(used) != len(self.points()):
            raise DiagramException("Arcs must use every point of the diagram exactly once")

        for tail, head in self.arcs:
            if tail[0] == 0 and head[0] == 0:
                raise NotTypeAException(f"Arc {tail}->{head} joins two output points")
            tail_ok = tail[1] % 2 == (0 if tail[0] == 0 else 1)
            head_ok = head[1] % 2 == (1 if head[0] == 0 else 0)
            if not (tail_ok and head_ok):
                raise OrientationClashException(f"Arc {tail}->{head} disagrees with the In/Out flags of its ends")

        if self.is_juxtaposition():
            return

        uf = UnionFind(disc for disc in range(self.d + 1) if self.size(disc))
        for tail, head in self.arcs:
            uf.union(tail[0], head[0])
        if any(self.size(disc) == 0 for disc in range(1, self.d + 1)) or len(uf.groups()) > 1:
            raise DiagramException("A diagram with arcs must connect every disc")

        n = len(self.points())
        expected = n // 2 + (2 if self.output_k == 0 else 1) - self.d
        if len(self.faces) != expected:
            raise CrossingArcsException(f"Arcs cross: {len(self.faces)} faces traced, a planar diagram has {expected}")

        if self.output_k == 0 and self.outer not in self.face_of:
            raise DiagramException("A closed diagram needs the point of its unbounded face")


    @classmethod
    def juxtaposition(cls, d: int) -> 'PlanarArcDiagram':
        """ Put d closed pictures side by side. """

        return cls(0, (0,) * d, ())


    @classmethod
    def radial(cls, k: int) -> 'PlanarArcDiagram':
        """ The identity operation on smoothings with 2k points. """

        arcs = [((0, p), (1, p)) if p % 2 == 0 else ((1, p), (0, p)) for p in range(2 * k)]
        return cls(k, (k,), tuple(arcs))


    def to_dict(self) -> Dict:
        result = {'output_k': self.output_k, 'inputs': list(self.input_ks),
                  'arcs': [[list(tail), list(head)] for tail, head in self.arcs]}
        if self.outer is not None:
            result['outer'] = list(self.outer)
        return result


    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def make_diagram(data) -> PlanarArcDiagram:
    """
    Build and validate a diagram from its dictionary (or JSON) form:
    ``{"output_k": 1, "inputs": [2], "arcs": [[[1, 1], [1, 2]], ...], "outer": [1, 0]}``.
    `outer` is only used when `output_k` is 0.

    :raises NotTypeAException:          if an arc joins two output points.
    :raises OrientationClashException:  if an arc disagrees with the In/Out flags.
    :raises CrossingArcsException:      if the arcs cannot be drawn without crossings.
    """

    if isinstance(data, str):
        data = json.loads(data)

    arcs = tuple((tuple(tail), tuple(head)) for tail, head in data.get('arcs', []))
    outer = tuple(data['outer']) if data.get('outer') is not None else None
    return PlanarArcDiagram(int(data['output_k']), tuple(int(k) for k in data['inputs']), arcs, outer)


@dataclass(frozen=True)
class ArcClassification:
    curls: int
    interconnecting: int
    boundary: int
    negative_internal: int
    rotation: Fraction

    @property
    def i_d(self) -> int:
        return self.curls + self.interconnecting

    @property
    def w_d(self) -> int:
        return self.negative_internal


@lru_cache(maxsize=None)
def classify(d: PlanarArcDiagram) -> ArcClassification:
    """
    Count curls, interconnecting and boundary arcs and the negative internal faces,
    then R_D = (1 + i_D - d) / 2 - w_D.

    For a closed output, the unbounded face is not internal and adds +1/2 when negative, -1/2 when positive.
    Side by side pictures have R_D = 0.
    """

    curls = sum(1 for tail, head in d.arcs if tail[0] == head[0])
    boundary = sum(1 for tail, head in d.arcs if 0 in (tail[0], head[0]))
    interconnecting = len(d.arcs) - curls - boundary

    if d.is_juxtaposition():
        return ArcClassification(0, 0, 0, 0, Fraction(0))

    if d.output_k == 0:
        outer = d.face_of[d.outer]
        internal = [f for f in range(len(d.faces)) if f != outer]
    else:
        outer = None
        internal = [f for f, cycle in enumerate(d.faces) if all(x[0] != 0 for x in cycle)]

    negative = sum(1 for f in internal if d.face_sign(f) < 0)
    rotation = Fraction(1 + curls + interconnecting - d.d, 2) - negative
    if outer is not None:
        rotation += Fraction(1, 2) if d.face_sign(outer) < 0 else Fraction(-1, 2)

    return ArcClassification(curls, interconnecting, boundary, negative, rotation)


def unary_basic(k: int, position: int, sign: int) -> PlanarArcDiagram:
    """
    One input with 2k points, a curl joining `position` and `position + 1`, every other point taken radially
    to the output. The curl face is positive when `position` is an `Out` point, negative otherwise.

    :param sign: +1 or -1, must agree with `position`.
    :raises IncompatibleException: if the curl cannot be oriented with the requested sign.
    """

    n = 2 * k
    if k < 1 or not 0 <= position < n:
        raise IncompatibleException(f"No curl at {position} on a circle with {n} points")

    forced = 1 if position % 2 else -1
    if sign != forced:
        raise IncompatibleException(f"A curl at {position} with k={k} completes a loop of sign {forced}, not {sign}")

    nxt = (position + 1) % n
    arcs = [((1, position), (1, nxt)) if position % 2 else ((1, nxt), (1, position))]

    remaining = [(position + 2 + m) % n for m in range(n - 2)]
    if position % 2:
        remaining = rotate_to_front(remaining, 1)
    for m, p in enumerate(remaining):
        arcs.append(((0, m), (1, p)) if p % 2 == 0 else ((1, p), (0, m)))

    outer = (1, nxt) if k == 1 else None
    return PlanarArcDiagram(k - 1, (k,), tuple(arcs), outer)


def binary_basic(k1: int, k2: int, p1: int, p2: int) -> PlanarArcDiagram:
    """
    Two inputs joined by one arc between point p1 of the first and p2 of the second. The remaining points go to
    the output counterclockwise: those of the first disc starting after p1, then those of the second after p2.

    :raises OrientationClashException: if p1 and p2 are both `In` or both `Out`.
    """

    if not (0 <= p1 < 2 * k1 and 0 <= p2 < 2 * k2):
        raise IncompatibleException(f"Glue points {p1}, {p2} are outside the discs")
    if p1 % 2 == p2 % 2:
        raise OrientationClashException(f"Points {p1} and {p2} have the same orientation and cannot be joined")

    arcs = [((1, p1), (2, p2)) if p1 % 2 else ((2, p2), (1, p1))]
    ring = [(1, (p1 + m) % (2 * k1)) for m in range(1, 2 * k1)] + [(2, (p2 + m) % (2 * k2)) for m in range(1, 2 * k2)]
    if ring[0][1] % 2:
        ring = rotate_to_front(ring, 1)

    for m, (disc, p) in enumerate(ring):
        arcs.append(((0, m), (disc, p)) if p % 2 == 0 else ((disc, p), (0, m)))

    return PlanarArcDiagram(k1 + k2 - 1, (k1, k2), tuple(arcs))


def _check_inputs(d: PlanarArcDiagram, smoothings: Sequence[OrientedSmoothing]):
    if len(smoothings) != d.d:
        raise BoundaryMismatchException(f"The diagram has {d.d} inputs, got {len(smoothings)} smoothings")
    for i, (k, s) in enumerate(zip(d.input_ks, smoothings), start=1):
        if s.k != k:
            raise BoundaryMismatchException(f"Input {i} has k={k}, the smoothing {s} has k={s.k}")


def _loop_sign(d: PlanarArcDiagram, arcs: List[int], strands: Dict[int, List[Tuple[int, int]]]) -> int:
    """
    Orientation of a traced loop: flood fill the plane across every curve that is not part of the loop,
    starting from the face on the left of the first loop arc. Reaching the unbounded region means the loop
    runs clockwise.
    """

    uf = UnionFind()
    in_loop = set(arcs)

    for f, cycle in enumerate(d.faces):
        for x in cycle:
            y = d.partner[x]
            if y[0] == 0:
                uf.union(('face', f), 'outer')
            else:
                # segment between step(y) and y
                uf.union(('face', f), ('segment', y[0], (y[1] - 1) % d.size(y[0])))

    if d.output_k == 0:
        uf.union(('face', d.face_of[d.outer]), 'outer')

    for index, (tail, head) in enumerate(d.arcs):
        if index not in in_loop:
            uf.union(('face', d.face_of[tail]), ('face', d.face_of[head]))

    for disc, k in enumerate(d.input_ks, start=1):
        cuts = [tuple(sorted(pair)) for pair in strands.get(disc, [])]
        sides = {}
        for segment in range(2 * k):
            label = tuple(a <= segment < b for a, b in cuts)
            if label in sides:
                uf.union(('segment', disc, segment), ('segment', disc, sides[label]))
            else:
                sides[label] = segment

    left = ('face', d.face_of[d.arcs[arcs[0]][0]])
    return -1 if uf.find(left) == uf.find('outer') else 1


@lru_cache(maxsize=1 << 16)
def trace_composition(d: PlanarArcDiagram,
                      smoothings: Tuple[OrientedSmoothing, ...]) -> Tuple[OrientedSmoothing, Tuple]:
    """
    Glue the smoothings into the diagram.

    :return: the composite smoothing and its provenance: pairs (key, composite string id) where the key is
             (disc, string id) for an input string or ('arc', index) for an arc of the diagram.
    """

    _check_inputs(d, smoothings)

    inner = {}
    for disc, s in enumerate(smoothings, start=1):
        for a, b in s.strands:
            inner[(disc, a)] = ((disc, b), f"s{a}")

    provenance = {}
    pairs = []
    for o in range(0, 2 * d.output_k, 2):
        x, pieces = (0, o), []
        while True:
            pieces.append(('arc', d.arc_at[x]))
            y = d.partner[x]
            if y[0] == 0:
                break
            x, sid = inner[y]
            pieces.append((y[0], sid))
        pairs.append((o, y[1]))
        provenance.update({piece: f"s{o}" for piece in pieces})

    loops = []
    for disc, s in enumerate(smoothings, start=1):
        for lid in s.loop_ids():
            loops.append((s.loop_sign(lid), [(disc, lid)]))

    for index, (tail, _) in enumerate(d.arcs):
        if ('arc', index) in provenance or any(('arc', index) in pieces for _, pieces in loops):
            continue
        arcs, strands, pieces = [], {}, []
        x = tail
        while True:
            arc = d.arc_at[x]
            if arcs and arc == arcs[0]:
                break
            arcs.append(arc)
            pieces.append(('arc', arc))
            y = d.partner[x]
            x, sid = inner[y]
            strands.setdefault(y[0], []).append((y[1], x[1]))
            pieces.append((y[0], sid))
        loops.append((_loop_sign(d, arcs, strands), pieces))

    loops.sort(key=lambda x: x[0])
    for i, (_, pieces) in enumerate(loops):
        provenance.update({piece: f"l{i}" for piece in pieces})

    result = make_smoothing(d.output_k, pairs, [sign for sign, _ in loops])

    if _check_rotation:
        expected = classify(d).rotation + sum((rotation_number(s) for s in smoothings), Fraction(0))
        if rotation_number(result) != expected:
            raise DiagramException(f"Rotation is not additive: R({result}) = {rotation_number(result)}, "
                                   f"expected {expected}")

    return result, tuple(sorted(provenance.items(), key=str))


def compose_smoothings(d: PlanarArcDiagram, smoothings: Sequence[OrientedSmoothing]) -> OrientedSmoothing:
    """
    Glue smoothings into the inputs of `d`. Traced strands that reach the output become output strands,
    closed ones become loops.

    :raises BoundaryMismatchException: if a smoothing does not fit its input circle.
    """

    return trace_composition(d, tuple(smoothings))[0]


@lru_cache(maxsize=1 << 18)
def _glue_horizontal(d: PlanarArcDiagram, sources: Tuple[OrientedSmoothing, ...],
                     targets: Tuple[OrientedSmoothing, ...], parts: Tuple) -> Tuple[Component, ...]:
    below = dict(trace_composition(d, sources)[1])
    above = dict(trace_composition(d, targets)[1])

    pieces = [('arc', index) for index in range(len(d.arcs))]
    pieces += [(disc, c) for disc, term in enumerate(parts, start=1) for c in term]
    uf = UnionFind(range(len(pieces)))

    for n, (disc, c) in enumerate(pieces[len(d.arcs):], start=len(d.arcs)):
        for p in c.lines:
            uf.union(n, d.arc_at[(disc, p)])

    result = []
    for group in uf.groups():
        bottom, top, lines, euler, dots = set(), set(), set(), 0, 0
        for n in group:
            owner, c = pieces[n]
            if owner == 'arc':
                tail, head = d.arcs[c]
                bottom.add(below[('arc', c)])
                top.add(above[('arc', c)])
                lines.update(x[1] for x in (tail, head) if x[0] == 0)
                euler += 1
            else:
                bottom.update(below[(owner, sid)] for sid in c.bottom)
                top.update(above[(owner, sid)] for sid in c.top)
                euler += c.euler - len(c.lines)
                dots += c.dots
        result.append(Component(frozenset(bottom), frozenset(top), frozenset(lines), euler, dots))
    return tuple(result)


def compose_cobordisms(d: PlanarArcDiagram, combos: Sequence[MorphismCombo]) -> MorphismCombo:
    """
    Place cobordisms into the inputs of `d`, a vertical curtain over every arc, and glue. Multilinear.

    :raises BoundaryMismatchException: if a cobordism does not fit its input circle.
    """

    sources = tuple(m.source for m in combos)
    targets = tuple(m.target for m in combos)
    source = compose_smoothings(d, sources)
    target = compose_smoothings(d, targets)

    raw = []
    for choice in product(*(list(m.raw_items()) for m in combos)):
        coefficient = Fraction(1)
        for _, value in choice:
            coefficient *= value
        raw.append((_glue_horizontal(d, sources, targets, tuple(key for key, _ in choice)), coefficient))
    return from_terms(source, target, raw)


def object_tuples(complexes: Sequence[Complex]) -> Dict[int, List[Tuple[Tuple[int, int], ...]]]:
    """
    Positions of the composite objects: degree r -> tuples ((r_1, i_1), ..., (r_d, i_d)) with r_1 + ... + r_d = r,
    ordered by the numerations of the last input first, then the one before, and so on.
    """

    numerations = [numerate(c) for c in complexes]
    result = {}
    for choice in product(*(list(n.items()) for n in numerations)):
        r = sum(position[0] for position, _ in choice)
        result.setdefault(r, []).append(choice)

    return {r: [tuple(position for position, _ in choice)
                for choice in sorted(items, key=lambda x: tuple(g for _, g in reversed(x)))]
            for r, items in sorted(result.items())}


def compose_complexes(d: PlanarArcDiagram, complexes: Sequence[Complex]) -> Complex:
    """
    The complex D(Ω_1, ..., Ω_d): objects are the composites of every tuple of objects with the shifts added,
    the differential changes one input at a time with the sign (-1)^(r_1 + ... + r_{i-1}).

    :raises BoundaryMismatchException: if a complex does not fit its input circle.
    """

    if len(complexes) != d.d:
        raise BoundaryMismatchException(f"The diagram has {d.d} inputs, got {len(complexes)} complexes")
    for i, (k, c) in enumerate(zip(d.input_ks, complexes), start=1):
        if c.boundary.k != k:
            raise BoundaryMismatchException(f"Input {i} has k={k}, the complex has k={c.boundary.k}")

    tuples = object_tuples(complexes)
    where = {t: (r, i) for r, items in tuples.items() for i, t in enumerate(items)}

    objects = {}
    for r, items in tuples.items():
        objs = []
        for t in items:
            pieces = [c.at(ri)[ii] for c, (ri, ii) in zip(complexes, t)]
            objs.append(ShiftedSmoothing(compose_smoothings(d, [x.smoothing for x in pieces]),
                                         sum(x.q for x in pieces)))
        objects[r] = objs

    identities = {}

    def identity(c_index: int, position: Tuple[int, int]) -> MorphismCombo:
        key = (c_index, position)
        if key not in identities:
            identities[key] = identity_cobordism(complexes[c_index].at(position[0])[position[1]].smoothing)
        return identities[key]

    differentials = {}
    for t, (r, i) in where.items():
        for slot, c in enumerate(complexes):
            ri, ii = t[slot]
            sign = -1 if sum(t[j][0] for j in range(slot)) % 2 else 1
            for (jj, source), entry in c.differentials.get(ri, {}).items():
                if source != ii:
                    continue
                image = t[:slot] + ((ri + 1, jj),) + t[slot + 1:]
                parts = [identity(n, position) for n, position in enumerate(t)]
                parts[slot] = entry
                _, j = where[image]
                differentials.setdefault(r, {})[(j, i)] = compose_cobordisms(d, parts) * sign

    logger.debug(f"Composed {d.d} complexes into {sum(len(x) for x in objects.values())} objects")
    return Complex(BoundaryConfig(d.output_k), objects, differentials)
