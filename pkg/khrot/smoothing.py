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

Oriented crossingless smoothings of a disc with 2k alternating boundary points, and their rotation numbers.

Boundary points are labelled 0..2k-1 counterclockwise. Even points are `In` (a strand starts there),
odd points are `Out`. Strands are stored as (start, end) pairs sorted by start, loops as a sorted tuple
of signs: +1 for a counterclockwise loop, -1 for a clockwise one. Loop placement is not stored.

Strings are addressed by identifiers: `s<start>` for the strand starting at `start`, `l<i>` for the i-th loop.
"""

__all__ = ['BoundaryConfig', 'OrientedSmoothing', 'ShiftedSmoothing', 'IN', 'OUT', 'make_smoothing',
           'strand_rotation', 'rotation_number', 'shifted_rotation', 'mirror', 'all_smoothings', 'parse_smoothing',
           'EMPTY']
__author__ = "khrot contributors"

import logging
import re

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from khrot.components.exceptions import *


logger = logging.getLogger()

IN = 'In'
OUT = 'Out'


@dataclass(frozen=True)
class BoundaryConfig:
    """
    2k marked points on the boundary circle of a disc with alternating orientation, point 0 is `In`.
    """

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise BadOrientationException(f"Boundary half size must be a nonnegative integer, got {self.k}")

    @property
    def size(self) -> int:
        return 2 * self.k

    def points(self) -> range:
        return range(2 * self.k)

    def orientation(self, point: int) -> str:
        return IN if point % 2 == 0 else OUT

    def is_in(self, point: int) -> bool:
        return point % 2 == 0


@dataclass(frozen=True)
class OrientedSmoothing:
    boundary: BoundaryConfig
    strands: Tuple[Tuple[int, int], ...] = ()
    loops: Tuple[int, ...] = ()

    @property
    def k(self) -> int:
        return self.boundary.k

    def string_ids(self) -> List[str]:
        return [f"s{a}" for a, _ in self.strands] + [f"l{i}" for i in range(len(self.loops))]

    def strand_ids(self) -> List[str]:
        return [f"s{a}" for a, _ in self.strands]

    def loop_ids(self) -> List[str]:
        return [f"l{i}" for i in range(len(self.loops))]

    def endpoints(self, string_id: str) -> Tuple[int, ...]:
        """ The boundary points of a string: (start, end) for strands, () for loops. """

        if string_id.startswith('l'):
            if int(string_id[1:]) >= len(self.loops):
                raise StrandNotFoundException(f"No loop {string_id} in {self}")
            return ()
        start = int(string_id[1:])
        for a, b in self.strands:
            if a == start:
                return a, b
        raise StrandNotFoundException(f"No strand {string_id} in {self}")

    def loop_sign(self, loop_id: str) -> int:
        return self.loops[int(loop_id[1:])]

    def partner(self, point: int) -> int:
        for a, b in self.strands:
            if a == point:
                return b
            if b == point:
                return a
        raise StrandNotFoundException(f"Point {point} is not on the boundary of {self}")

    def strand_at(self, point: int) -> str:
        """ Identifier of the strand having `point` as an endpoint. """

        for a, b in self.strands:
            if point in (a, b):
                return f"s{a}"
        raise StrandNotFoundException(f"Point {point} is not on the boundary of {self}")

    def without_loop(self, index: int) -> Tuple['OrientedSmoothing', Dict[str, str]]:
        """
        Remove the loop `l<index>`.

        :return: the new smoothing and the renaming of every remaining string of `self` to its id in the new one.
        """

        if not 0 <= index < len(self.loops):
            raise StrandNotFoundException(f"No loop l{index} in {self}")

        remaining = list(self.loops[:index]) + list(self.loops[index + 1:])
        renaming = {sid: sid for sid in self.strand_ids()}
        for old in range(len(self.loops)):
            if old != index:
                renaming[f"l{old}"] = f"l{old if old < index else old - 1}"
        return OrientedSmoothing(self.boundary, self.strands, tuple(remaining)), renaming

    def with_loop(self, sign: int) -> Tuple['OrientedSmoothing', str, Dict[str, str]]:
        """
        Add a loop of the given sign.

        :return: the new smoothing, the id of the added loop, and the renaming of the strings of `self`.
        """

        if sign not in (1, -1):
            raise BadOrientationException(f"Loop sign must be +1 or -1, got {sign}")

        # the new loop goes after every existing loop of the same sign
        position = sum(1 for x in self.loops if x <= sign)
        loops = list(self.loops[:position]) + [sign] + list(self.loops[position:])
        renaming = {sid: sid for sid in self.strand_ids()}
        for old in range(len(self.loops)):
            renaming[f"l{old}"] = f"l{old if old < position else old + 1}"
        return OrientedSmoothing(self.boundary, self.strands, tuple(loops)), f"l{position}", renaming

    def __str__(self):
        parts = [f"k={self.k}"]
        if self.strands:
            parts.append(", ".join(f"{a}-{b}" for a, b in self.strands))
        if self.loops:
            parts.append("loops=" + ",".join(f"{x:+d}" for x in self.loops))
        return f"S({'; '.join(parts)})"


EMPTY = OrientedSmoothing(BoundaryConfig(0))


@dataclass(frozen=True)
class ShiftedSmoothing:
    smoothing: OrientedSmoothing
    q: int = 0

    def shifted(self, dq: int) -> 'ShiftedSmoothing':
        return ShiftedSmoothing(self.smoothing, self.q + dq)

    def __str__(self):
        return f"{self.smoothing}{{{self.q}}}"


def _interleave(first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    a, b = sorted(first)
    return (a < second[0] < b) != (a < second[1] < b)


def make_smoothing(k: int, strand_pairs: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()) -> OrientedSmoothing:
    """
    Validate and build an oriented smoothing.

    :param k:               Half the number of boundary points.
    :param strand_pairs:    (start, end) pairs. Starts must be `In` (even) points and ends `Out` (odd) points.
    :param loops:           Signs of the loops, +1 counterclockwise, -1 clockwise.
    :raises NotPerfectMatchingException: if the pairs do not use every boundary point exactly once.
    :raises CrossingMatchingException: if two pairs interleave around the circle.
    :raises BadOrientationException: if a strand does not run from an `In` point to an `Out` point.
    """

    boundary = BoundaryConfig(k)
    pairs = [tuple(int(x) for x in pair) for pair in strand_pairs]

    used = [p for pair in pairs for p in pair]
    if any(len(pair) != 2 for pair in pairs) or sorted(used) != list(boundary.points()):
        raise NotPerfectMatchingException(f"Strands {pairs} are not a perfect matching of {2 * k} points")

    for i, first in enumerate(pairs):
        for second in pairs[i + 1:]:
            if _interleave(first, second):
                raise CrossingMatchingException(f"Strands {first} and {second} cross")

    for start, end in pairs:
        if not boundary.is_in(start) or boundary.is_in(end):
            raise BadOrientationException(f"Strand {start}->{end} must start at an In point and end at an Out point")

    signs = tuple(sorted(int(x) for x in loops))
    if any(x not in (1, -1) for x in signs):
        raise BadOrientationException(f"Loop signs must be +1 or -1, got {signs}")

    return OrientedSmoothing(boundary, tuple(sorted(pairs)), signs)


def strand_rotation(s: OrientedSmoothing, strand: Union[str, Tuple[int, int]]) -> Fraction:
    """
    Rotation number of one strand: relabel the boundary so the strand starts at 0 and ends at i,
    then the rotation is (i - k) / 2k.

    The strand is either an identifier of `s` or a pair of boundary points. A pair is read as the
    direction of traversal; it must be a strand of `s` in one direction or the other. Traversing
    a strand against its orientation negates its rotation.
    """

    if isinstance(strand, str):
        if strand.startswith('l'):
            raise StrandNotFoundException(f"{strand} is not a strand of {s}")
        start, end = s.endpoints(strand)
    else:
        start, end = strand
        if (start, end) not in s.strands and (end, start) not in s.strands:
            raise StrandNotFoundException(f"No strand joining {start} and {end} in {s}")

    n = 2 * s.k
    return Fraction((end - start) % n - s.k, n)


def rotation_number(s: OrientedSmoothing) -> Fraction:
    """ Sum of the strand rotations plus +1 per counterclockwise and -1 per clockwise loop. """

    return _rotation(s)


@lru_cache(maxsize=None)
def _rotation(s: OrientedSmoothing) -> Fraction:
    n = 2 * s.k
    total = sum((Fraction((b - a) % n - s.k, n) for a, b in s.strands), Fraction(0))
    return total + sum(s.loops)


def shifted_rotation(ss: ShiftedSmoothing) -> Fraction:
    return rotation_number(ss.smoothing) + ss.q


def mirror(s: OrientedSmoothing) -> OrientedSmoothing:
    """
    Reflect the disc: relabel p -> 2k-1-p, then move the label 0 back onto an `In` point.
    Altogether p -> -p mod 2k, strand directions kept and loops reversed. Negates the rotation number.
    """

    n = 2 * s.k
    strands = tuple(sorted(((-a) % n, (-b) % n) for a, b in s.strands)) if n else ()
    return OrientedSmoothing(s.boundary, strands, tuple(sorted(-x for x in s.loops)))


def _matchings(points: Tuple[int, ...]) -> List[List[Tuple[int, int]]]:
    if not points:
        return [[]]
    result = []
    first = points[0]
    for j in range(1, len(points), 2):
        for inner in _matchings(points[1:j]):
            for outer in _matchings(points[j + 1:]):
                result.append([(first, points[j])] + inner + outer)
    return result


def all_smoothings(k: int, loops: Iterable[int] = ()) -> List[OrientedSmoothing]:
    """
    Every valid smoothing with 2k boundary points and the given loops, in a fixed order.
    There are Catalan(k) of them.
    """

    signs = tuple(sorted(loops))
    result = []
    for matching in _matchings(tuple(range(2 * k))):
        oriented = [(a, b) if a % 2 == 0 else (b, a) for a, b in matching]
        result.append(OrientedSmoothing(BoundaryConfig(k), tuple(sorted(oriented)), signs))
    return result


_TEXT = re.compile(r"^\s*S\(\s*k\s*=\s*(\d+)\s*(.*)\)\s*$")


def parse_smoothing(text: str) -> OrientedSmoothing:
    """
    Read the canonical text form, e.g. ``S(k=2; 0-1, 2-3; loops=+1)``.
    """

    match = _TEXT.match(text)
    if not match:
        raise SmoothingException(f"Not a smoothing: {text!r}")

    k = int(match.group(1))
    pairs, loops = [], []
    for part in [x.strip() for x in match.group(2).split(';') if x.strip()]:
        if part.startswith('loops='):
            loops = [int(x) for x in part[len('loops='):].split(',') if x.strip()]
        else:
            for chunk in part.split(','):
                start, end = chunk.strip().split('-')
                pairs.append((int(start), int(end)))
    return make_smoothing(k, pairs, loops)
