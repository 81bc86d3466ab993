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

Dotted cobordisms between oriented smoothings, modulo the local relations, with rational coefficients.

A cobordism is recorded by connectivity only: each connected component knows which source strings (`bottom`),
target strings (`top`) and vertical boundary lines it contains, its Euler characteristic and its number of dots.

Normal form. Two is invertible, so a handle equals two dots and every neck can be cut. A term is in normal form
when every component is a disc (one boundary circle, Euler characteristic 1) carrying at most one dot.
`normalize` brings any term there:

- a component of genus g becomes 2^g times the same component with g more dots and genus 0;
- two or more dots on one component kill the term;
- a closed sphere kills the term, a closed sphere with one dot is the scalar 1;
- a component with b >= 2 boundary circles is cut into b discs, summed over the ways of putting
  dots + b - 1 dots on them, at most one each.
"""

__all__ = ['Component', 'Cobordism', 'MorphismCombo', 'identity_cobordism', 'elementary', 'saddle', 'cap', 'cup',
           'dot', 'compose_vertical', 'normalize', 'boundary_circles', 'degree', 'is_invertible_entry',
           'combo_from_json', 'degree_or_raise', 'from_terms']
__author__ = "khrot contributors"

import json
import logging

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from khrot.components.exceptions import *
from khrot.components.helpers import UnionFind
from khrot.smoothing import OrientedSmoothing, parse_smoothing


logger = logging.getLogger()

Term = FrozenSet['Component']


@dataclass(frozen=True)
class Component:
    bottom: FrozenSet[str] = frozenset()
    top: FrozenSet[str] = frozenset()
    lines: FrozenSet[int] = frozenset()
    euler: int = 1
    dots: int = 0

    def sort_key(self):
        return sorted(self.bottom), sorted(self.top), sorted(self.lines), self.euler, self.dots

    def to_dict(self) -> Dict:
        return {'bottom': sorted(self.bottom), 'top': sorted(self.top), 'lines': sorted(self.lines),
                'euler': self.euler, 'dots': self.dots}

    @property
    def is_closed(self) -> bool:
        return not (self.bottom or self.top or self.lines)


def _disc(bottom: Iterable[str], top: Iterable[str], lines: Iterable[int], dots: int = 0) -> Component:
    return Component(frozenset(bottom), frozenset(top), frozenset(lines), 1, dots)


@dataclass(frozen=True)
class Cobordism:
    source: OrientedSmoothing
    target: OrientedSmoothing
    components: FrozenSet[Component]

    def __str__(self):
        parts = [f"{sorted(c.bottom)}|{sorted(c.top)}|{sorted(c.lines)}|e{c.euler}|d{c.dots}"
                 for c in sorted(self.components, key=Component.sort_key)]
        return f"{self.source} -> {self.target}: " + (" ; ".join(parts) or "empty")


def _circles(source: OrientedSmoothing, target: OrientedSmoothing, bottom: Iterable[str], top: Iterable[str],
             lines: Iterable[int]) -> List[Tuple[FrozenSet[str], FrozenSet[str], FrozenSet[int]]]:
    """
    Boundary circles of a surface piece: strands of the source and target are joined through the vertical
    lines at their endpoints, every loop is a circle by itself.
    """

    uf = UnionFind()
    circles = []

    for side, smoothing, strings in (('b', source, bottom), ('t', target, top)):
        for sid in sorted(strings):
            if sid.startswith('l'):
                loop = frozenset({sid})
                circles.append((loop, frozenset(), frozenset()) if side == 'b' else (frozenset(), loop, frozenset()))
                continue
            a, b = smoothing.endpoints(sid)
            uf.union(('p', a), ('p', b))
            uf.union((side, sid), ('p', a))

    for p in lines:
        uf.add(('p', p))

    for group in uf.groups():
        circles.append((frozenset(x[1] for x in group if x[0] == 'b'),
                        frozenset(x[1] for x in group if x[0] == 't'),
                        frozenset(x[1] for x in group if x[0] == 'p')))
    return circles


def boundary_circles(c: Component, source: OrientedSmoothing, target: OrientedSmoothing) -> int:
    """
    Number of closed curves in the boundary of the component: source strand, its vertical lines, target strands
    and so on around; every loop of the component counts as one circle.
    """

    return len(_circles(source, target, c.bottom, c.top, c.lines))


@lru_cache(maxsize=1 << 18)
def _normal_terms(components: Term, source: OrientedSmoothing,
                  target: OrientedSmoothing) -> Tuple[Tuple[Term, Fraction], ...]:
    factor = Fraction(1)
    alternatives = []

    for c in components:
        circles = _circles(source, target, c.bottom, c.top, c.lines)
        twice_genus = 2 - c.euler - len(circles)
        if twice_genus < 0 or twice_genus % 2:
            raise ShapeMismatchException(f"Impossible surface: euler {c.euler} with {len(circles)} boundary circles")

        genus = twice_genus // 2
        factor *= 2 ** genus
        dots = c.dots + genus
        if dots >= 2:
            return ()

        if not circles:
            if dots == 0:
                return ()
            continue

        options = []
        for dotted in combinations(range(len(circles)), dots + len(circles) - 1):
            options.append([_disc(*circle, dots=1 if i in dotted else 0) for i, circle in enumerate(circles)])
        alternatives.append(options)

    return tuple((frozenset(disc for part in choice for disc in part), factor) for choice in product(*alternatives))


class MorphismCombo:
    """
    Rational linear combination of normal form cobordisms from `source` to `target`.
    Terms are stored as frozensets of components, zero coefficients are never kept.
    Instances are treated as immutable values.
    """

    __slots__ = ('source', 'target', '_terms')


    def __init__(self, source: OrientedSmoothing, target: OrientedSmoothing,
                 terms: Mapping[Term, Fraction] = None):
        if source.boundary != target.boundary:
            raise BoundaryMismatchException(f"Boundaries differ: {source} and {target}")

        self.source = source
        self.target = target
        self._terms = {key: Fraction(value) for key, value in (terms or {}).items() if value}


    @classmethod
    def zero(cls, source: OrientedSmoothing, target: OrientedSmoothing) -> 'MorphismCombo':
        return cls(source, target)


    def is_zero(self) -> bool:
        return not self._terms


    def keys(self) -> Iterable[Term]:
        return self._terms.keys()


    def coefficient(self, key: Term) -> Fraction:
        return self._terms.get(key, Fraction(0))


    def raw_items(self) -> Iterable[Tuple[Term, Fraction]]:
        return self._terms.items()


    def items(self) -> Iterator[Tuple[Cobordism, Fraction]]:
        for key, value in self._terms.items():
            yield Cobordism(self.source, self.target, key), value


    @property
    def terms(self) -> Dict[Cobordism, Fraction]:
        return dict(self.items())


    def __len__(self):
        return len(self._terms)


    def _check_same_ends(self, other: 'MorphismCombo'):
        if self.source != other.source or self.target != other.target:
            raise BoundaryMismatchException(f"Cannot add morphisms {self.source}->{self.target} "
                                            f"and {other.source}->{other.target}")


    def __add__(self, other: 'MorphismCombo') -> 'MorphismCombo':
        self._check_same_ends(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, 0) + value
        return MorphismCombo(self.source, self.target, terms)


    def __neg__(self) -> 'MorphismCombo':
        return MorphismCombo(self.source, self.target, {key: -value for key, value in self._terms.items()})


    def __sub__(self, other: 'MorphismCombo') -> 'MorphismCombo':
        return self + (-other)


    def __mul__(self, scalar) -> 'MorphismCombo':
        scalar = Fraction(scalar)
        return MorphismCombo(self.source, self.target, {key: value * scalar for key, value in self._terms.items()})


    __rmul__ = __mul__


    def __eq__(self, other):
        if not isinstance(other, MorphismCombo):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self._terms == other._terms


    __hash__ = None


    def compose(self, first: 'MorphismCombo') -> 'MorphismCombo':
        """ `self` after `first`. """

        return compose_vertical(self, first)


    def to_dict(self) -> Dict:
        terms = []
        for key, value in self._terms.items():
            components = [c.to_dict() for c in sorted(key, key=Component.sort_key)]
            terms.append({'coefficient': str(value), 'components': components})
        terms.sort(key=lambda x: json.dumps(x['components'], sort_keys=True))
        return {'source': str(self.source), 'target': str(self.target), 'terms': terms}


    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


    def __repr__(self):
        if not self._terms:
            return f"0: {self.source} -> {self.target}"
        parts = [f"{value}*[{Cobordism(self.source, self.target, key)}]" for key, value in self._terms.items()]
        return " + ".join(sorted(parts))


def combo_from_json(data) -> MorphismCombo:
    """
    Inverse of `MorphismCombo.to_json`, accepts the string or the already parsed dictionary.
    """

    if isinstance(data, str):
        data = json.loads(data)

    terms = defaultdict(Fraction)
    for term in data['terms']:
        key = frozenset(Component(frozenset(c['bottom']), frozenset(c['top']), frozenset(c['lines']),
                                  c['euler'], c['dots']) for c in term['components'])
        terms[key] += Fraction(term['coefficient'])
    return MorphismCombo(parse_smoothing(data['source']), parse_smoothing(data['target']), terms)


def _from_raw(source: OrientedSmoothing, target: OrientedSmoothing,
              raw: Iterable[Tuple[Iterable[Component], Fraction]]) -> MorphismCombo:
    terms = defaultdict(Fraction)
    for components, coefficient in raw:
        for key, factor in _normal_terms(frozenset(components), source, target):
            terms[key] += coefficient * factor
    return MorphismCombo(source, target, terms)


def normalize(m: MorphismCombo) -> MorphismCombo:
    """ Rewrite every term of `m` into normal form and collect equal terms. Idempotent. """

    return _from_raw(m.source, m.target, m.raw_items())


def _curtains(s: OrientedSmoothing, renaming: Mapping[str, str] = None, skip: Iterable[str] = ()) -> List[Component]:
    """
    Vertical curtains over the strings of `s` except `skip`, top ids renamed by `renaming`.
    """

    result = []
    skip = set(skip)
    for sid in s.string_ids():
        if sid in skip:
            continue
        top = renaming[sid] if renaming else sid
        lines = frozenset(s.endpoints(sid))
        result.append(Component(frozenset({sid}), frozenset({top}), lines, 0 if sid.startswith('l') else 1, 0))
    return result


def identity_cobordism(s: OrientedSmoothing) -> MorphismCombo:
    """ Identity of `s`: a curtain over each string, brought to normal form (loop curtains are neck-cut). """

    return _from_raw(s, s, [(_curtains(s), Fraction(1))])


def _match_unchanged(source: OrientedSmoothing, target: OrientedSmoothing,
                     moving: Iterable[str]) -> Tuple[Dict[str, str], List[str]]:
    """
    Pair each string of `source` outside `moving` with an equal string of `target`:
    strands by endpoints, loops by sign in order. Returns the pairing and the unpaired target strings.
    """

    moving = set(moving)
    free_top = set(target.string_ids())
    pairing = {}
    for sid in source.strand_ids():
        if sid in moving:
            continue
        if sid not in free_top or source.endpoints(sid) != target.endpoints(sid):
            raise ShapeMismatchException(f"Strand {sid} of {source} is not present in {target}")
        pairing[sid] = sid
        free_top.discard(sid)

    target_loops = [lid for lid in target.loop_ids() if lid in free_top]
    for lid in source.loop_ids():
        if lid in moving:
            continue
        sign = source.loop_sign(lid)
        match = next((x for x in target_loops if target.loop_sign(x) == sign), None)
        if match is None:
            raise ShapeMismatchException(f"Loop {lid} of {source} has no counterpart in {target}")
        target_loops.remove(match)
        pairing[lid] = match
        free_top.discard(match)

    return pairing, sorted(free_top)


def saddle(source: OrientedSmoothing, target: OrientedSmoothing, strings: Sequence[str] = None) -> MorphismCombo:
    """
    The saddle cobordism. The moving source strings are `strings` if given, otherwise the strands of `source`
    that do not appear in `target`. Everything else is a curtain.
    """

    if source.boundary != target.boundary:
        raise BoundaryMismatchException(f"Boundaries differ: {source} and {target}")

    if strings is None:
        strings = [sid for sid in source.strand_ids()
                   if sid not in target.strand_ids() or source.endpoints(sid) != target.endpoints(sid)]
    strings = list(strings)
    pairing, top = _match_unchanged(source, target, strings)

    if not strings or not top:
        raise ShapeMismatchException(f"No saddle between {source} and {target}")

    bottom_lines = {p for sid in strings for p in source.endpoints(sid)}
    top_lines = {p for sid in top for p in target.endpoints(sid)}
    if bottom_lines != top_lines:
        raise ShapeMismatchException(f"Saddle strings of {source} and {target} end on different points")

    bottom_euler = sum(0 if sid.startswith('l') else 1 for sid in strings)
    top_euler = sum(0 if sid.startswith('l') else 1 for sid in top)
    if bottom_euler != top_euler or abs(len(strings) - len(top)) > 1 or len(strings) + len(top) < 3:
        raise ShapeMismatchException(f"{source} -> {target} is not a single saddle")

    moving = Component(frozenset(strings), frozenset(top), frozenset(bottom_lines), bottom_euler - 1, 0)
    if boundary_circles(moving, source, target) != 2 - moving.euler:
        raise ShapeMismatchException(f"{source} -> {target} is not a single saddle")

    components = [moving] + _curtains(source, pairing, skip=strings)
    return _from_raw(source, target, [(components, Fraction(1))])


def cap(source: OrientedSmoothing, loop: int = 0, dotted: bool = False) -> MorphismCombo:
    """ Cap off the loop `l<loop>` of `source`, optionally with a dot on the cap. """

    target, renaming = source.without_loop(loop)
    lid = f"l{loop}"
    components = [Component(frozenset({lid}), frozenset(), frozenset(), 1, int(dotted))]
    components += _curtains(source, renaming, skip=[lid])
    return _from_raw(source, target, [(components, Fraction(1))])


def cup(target: OrientedSmoothing, loop: int = 0, dotted: bool = False) -> MorphismCombo:
    """ Create the loop `l<loop>` of `target` from nothing, optionally with a dot on the cup. """

    source, renaming = target.without_loop(loop)
    lid = f"l{loop}"
    back = {new: old for old, new in renaming.items()}
    components = [Component(frozenset(), frozenset({lid}), frozenset(), 1, int(dotted))]
    components += _curtains(source, back)
    return _from_raw(source, target, [(components, Fraction(1))])


def dot(s: OrientedSmoothing, string_id: str) -> MorphismCombo:
    """ The identity of `s` with one dot on the curtain over `string_id`. """

    s.endpoints(string_id)
    components = [Component(c.bottom, c.top, c.lines, c.euler, 1) if string_id in c.bottom else c
                  for c in _curtains(s)]
    return _from_raw(s, s, [(components, Fraction(1))])


def elementary(source: OrientedSmoothing, target: OrientedSmoothing, kind: str,
               strings: Sequence[str] = ()) -> MorphismCombo:
    """
    One of the elementary cobordisms.

    :param kind:    `saddle`, `cap`, `cup` or `dot`.
    :param strings: For `saddle` the moving source strings (optional), for `cap` the loop of the source,
                    for `cup` the loop of the target, for `dot` the dotted string.
    :raises ShapeMismatchException: if `source` and `target` do not differ the way `kind` requires.
    """

    strings = list(strings)
    if kind == 'saddle':
        return saddle(source, target, strings or None)

    if kind in ('cap', 'cup'):
        if len(strings) != 1 or not strings[0].startswith('l'):
            raise ShapeMismatchException(f"A {kind} needs exactly one loop, got {strings}")
        index = int(strings[0][1:])
        result = cap(source, index) if kind == 'cap' else cup(target, index)
        if result.source != source or result.target != target:
            raise ShapeMismatchException(f"{source} -> {target} is not a {kind} on {strings[0]}")
        return result

    if kind == 'dot':
        if source != target or len(strings) != 1:
            raise ShapeMismatchException(f"A dot needs one string and equal ends, got {source} -> {target}")
        return dot(source, strings[0])

    raise ShapeMismatchException(f"Unknown elementary cobordism {kind}")


@lru_cache(maxsize=1 << 18)
def _glue_vertical(lower: Term, upper: Term) -> Tuple[Component, ...]:
    lower, upper = list(lower), list(upper)
    uf = UnionFind(range(len(lower) + len(upper)))
    owner = {sid: i for i, c in enumerate(lower) for sid in c.top}

    for j, c in enumerate(upper):
        for sid in c.bottom:
            uf.union(owner[sid], len(lower) + j)

    result = []
    for group in uf.groups():
        below = [lower[i] for i in group if i < len(lower)]
        above = [upper[i - len(lower)] for i in group if i >= len(lower)]
        glued = [sid for c in below for sid in c.top]
        euler = sum(c.euler for c in below + above) - sum(1 for sid in glued if not sid.startswith('l'))
        result.append(Component(frozenset().union(*(c.bottom for c in below)),
                                frozenset().union(*(c.top for c in above)),
                                frozenset().union(*(c.lines for c in below + above)),
                                euler,
                                sum(c.dots for c in below + above)))
    return tuple(result)


def compose_vertical(g: MorphismCombo, f: MorphismCombo) -> MorphismCombo:
    """
    `g` after `f`: stack `g` on top of `f`, glue components along the middle strings, normalize.

    :raises BoundaryMismatchException: if the target of `f` is not the source of `g`.
    """

    if f.target != g.source:
        raise BoundaryMismatchException(f"Cannot compose {g.source}->{g.target} after {f.source}->{f.target}")

    raw = []
    for lower, a in f.raw_items():
        for upper, b in g.raw_items():
            raw.append((_glue_vertical(lower, upper), a * b))
    return _from_raw(f.source, g.target, raw)


def _term_degree(key: Term, k: int) -> int:
    return sum(c.euler - 2 * c.dots for c in key) - k


def degree(m: MorphismCombo, source_shift: int = 0, target_shift: int = 0) -> Optional[int]:
    """
    Degree of a homogeneous combination including the grading shifts of its ends:
    euler - k - 2 * dots + (q_t - q_s). The zero morphism has degree 0.

    :return: the degree, or None when the terms have different degrees.
    """

    degrees = {_term_degree(key, m.source.k) for key in m.keys()}
    if not degrees:
        return 0
    if len(degrees) > 1:
        return None
    return degrees.pop() + target_shift - source_shift


def is_invertible_entry(m: MorphismCombo) -> bool:
    """
    True for a nonzero scalar times the identity of a loopless smoothing
    (the empty smoothing included, where every nonzero scalar qualifies).
    """

    if len(m) != 1 or m.source != m.target:
        return False

    key = next(iter(m.keys()))
    if len(key) != len(m.source.strands) + len(m.source.loops):
        return False

    for c in key:
        if c.dots or c.euler != 1 or len(c.bottom) != 1 or c.bottom != c.top:
            return False
        sid = next(iter(c.bottom))
        if sid.startswith('l') or c.lines != frozenset(m.source.endpoints(sid)):
            return False
    return True


def degree_or_raise(m: MorphismCombo, source_shift: int = 0, target_shift: int = 0) -> int:
    """ Same as `degree`, but a non-homogeneous combination raises `NonHomogeneousException`. """

    result = degree(m, source_shift, target_shift)
    if result is None:
        raise NonHomogeneousException(f"Terms of {m!r} have different degrees")
    return result


def from_terms(source: OrientedSmoothing, target: OrientedSmoothing,
               raw: Iterable[Tuple[Iterable[Component], Fraction]]) -> MorphismCombo:
    """ Combination of arbitrary (not necessarily normal) terms, brought to normal form. """

    return _from_raw(source, target, raw)
