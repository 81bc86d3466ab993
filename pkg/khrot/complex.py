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

Bounded chain complexes of shifted smoothings with matrices of cobordism combinations as differentials.

A `Complex` keeps, for every homological degree r, a tuple of `ShiftedSmoothing` objects and a sparse matrix
`differentials[r][(j, i)]`: the map from object i at degree r to object j at degree r + 1.
Complexes are immutable; every operation returns a new one.
"""

__all__ = ['Complex', 'HomologyTable', 'CoherenceReport', 'validate', 'deloop', 'gaussian_eliminate', 'exchange',
           'reduce', 'numerate', 'is_diagonal', 'partial_closure', 'is_coherently_diagonal', 'homology_table',
           'homology_ranks', 'matrix_rank', 'load_complex']
__author__ = "khrot contributors"

import json
import logging

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from khrot.components.exceptions import *
from khrot.cobordism import (MorphismCombo, cap, combo_from_json, compose_vertical, cup, degree,
                             is_invertible_entry)
from khrot.smoothing import BoundaryConfig, ShiftedSmoothing, parse_smoothing, shifted_rotation


logger = logging.getLogger()

Matrix = Dict[Tuple[int, int], MorphismCombo]


class Complex:
    """
    :param boundary:        Boundary shared by every smoothing.
    :param objects:         Degree -> sequence of shifted smoothings. Empty degrees are dropped.
    :param differentials:   Degree r -> {(j, i): combo from objects[r][i] to objects[r + 1][j]}.
                            Zero entries are dropped.
    """

    __slots__ = ('boundary', 'objects', 'differentials')


    def __init__(self, boundary: BoundaryConfig, objects: Mapping[int, Sequence[ShiftedSmoothing]],
                 differentials: Mapping[int, Mapping[Tuple[int, int], MorphismCombo]] = None):
        self.boundary = boundary
        self.objects = {r: tuple(v) for r, v in sorted(objects.items()) if v}
        self.differentials = {}
        for r, matrix in (differentials or {}).items():
            entries = {key: m for key, m in matrix.items() if not m.is_zero()}
            if entries:
                self.differentials[r] = entries


    @classmethod
    def single(cls, obj: ShiftedSmoothing, r: int = 0) -> 'Complex':
        return cls(obj.smoothing.boundary, {r: (obj,)})


    @classmethod
    def zero(cls, k: int = 0) -> 'Complex':
        return cls(BoundaryConfig(k), {})


    @property
    def degrees(self) -> List[int]:
        return list(self.objects)


    @property
    def amplitude(self) -> Optional[Tuple[int, int]]:
        if not self.objects:
            return None
        return min(self.objects), max(self.objects)


    def at(self, r: int) -> Tuple[ShiftedSmoothing, ...]:
        return self.objects.get(r, ())


    def entry(self, r: int, j: int, i: int) -> MorphismCombo:
        m = self.differentials.get(r, {}).get((j, i))
        if m is None:
            return MorphismCombo.zero(self.at(r)[i].smoothing, self.at(r + 1)[j].smoothing)
        return m


    def matrix(self, r: int) -> Matrix:
        return dict(self.differentials.get(r, {}))


    def size(self) -> int:
        return sum(len(v) for v in self.objects.values())


    def positions(self) -> Iterable[Tuple[int, int]]:
        for r, objs in self.objects.items():
            for i in range(len(objs)):
                yield r, i


    def shifted(self, h: int = 0, q: int = 0) -> 'Complex':
        """ The complex moved h homological degrees up, every grading shift increased by q. """

        objects = {r + h: tuple(x.shifted(q) for x in objs) for r, objs in self.objects.items()}
        differentials = {r + h: dict(matrix) for r, matrix in self.differentials.items()}
        return Complex(self.boundary, objects, differentials)


    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return (self.boundary == other.boundary and self.objects == other.objects
                and self.differentials == other.differentials)


    __hash__ = None


    def to_dict(self) -> Dict:
        objects = {str(r): [{'smoothing': str(x.smoothing), 'q': x.q} for x in objs]
                   for r, objs in self.objects.items()}
        differentials = {str(r): [{'target': j, 'source': i, 'combo': m.to_dict()}
                                  for (j, i), m in sorted(matrix.items())]
                         for r, matrix in self.differentials.items()}
        return {'k': self.boundary.k, 'objects': objects, 'differentials': differentials}


    def dump(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


    def __repr__(self):
        parts = []
        for r, objs in self.objects.items():
            parts.append(f"[{r}] " + ", ".join(str(x) for x in objs))
        return f"Complex(k={self.boundary.k}; " + " | ".join(parts) + ")"


def load_complex(data) -> Complex:
    """ Inverse of `Complex.dump`, accepts the JSON text or the parsed dictionary. """

    if isinstance(data, str):
        data = json.loads(data)

    objects = {int(r): [ShiftedSmoothing(parse_smoothing(x['smoothing']), x['q']) for x in objs]
               for r, objs in data['objects'].items()}
    differentials = {int(r): {(x['target'], x['source']): combo_from_json(x['combo']) for x in entries}
                     for r, entries in data['differentials'].items()}
    return Complex(BoundaryConfig(data['k']), objects, differentials)


@dataclass
class _Workspace:
    """
    Mutable form of a complex used while reducing: objects get permanent ids, so removing one never
    renumbers the others. `outgoing[x][y]` and `incoming[y][x]` hold the same combo from x to y.
    """

    boundary: BoundaryConfig
    degree: Dict[int, int] = field(default_factory=dict)
    obj: Dict[int, ShiftedSmoothing] = field(default_factory=dict)
    order: Dict[int, List[int]] = field(default_factory=lambda: defaultdict(list))
    outgoing: Dict[int, Dict[int, MorphismCombo]] = field(default_factory=lambda: defaultdict(dict))
    incoming: Dict[int, Dict[int, MorphismCombo]] = field(default_factory=lambda: defaultdict(dict))
    origin: Dict[int, Optional[Tuple]] = field(default_factory=dict)
    ids: count = field(default_factory=count)


    @classmethod
    def from_complex(cls, c: Complex) -> '_Workspace':
        work = cls(c.boundary)
        index = {}
        for r, objs in c.objects.items():
            for i, x in enumerate(objs):
                index[(r, i)] = work.add(r, x)
        for r, matrix in c.differentials.items():
            for (j, i), m in matrix.items():
                work.set(index[(r, i)], index[(r + 1, j)], m)
        return work


    def to_complex(self) -> Complex:
        objects, position = {}, {}
        for r in sorted(self.order):
            objects[r] = [self.obj[x] for x in self.order[r]]
            position.update({x: i for i, x in enumerate(self.order[r])})

        differentials = defaultdict(dict)
        for x, targets in self.outgoing.items():
            for y, m in targets.items():
                differentials[self.degree[x]][(position[y], position[x])] = m
        return Complex(self.boundary, objects, differentials)


    def add(self, r: int, x: ShiftedSmoothing, at: int = None, origin: Tuple = None) -> int:
        new = next(self.ids)
        self.degree[new] = r
        self.obj[new] = x
        self.origin[new] = origin
        if at is None:
            self.order[r].append(new)
        else:
            self.order[r].insert(at, new)
        return new


    def set(self, x: int, y: int, m: MorphismCombo):
        if m.is_zero():
            self.outgoing[x].pop(y, None)
            self.incoming[y].pop(x, None)
        else:
            self.outgoing[x][y] = m
            self.incoming[y][x] = m


    def remove(self, x: int):
        for y in list(self.outgoing.pop(x, {})):
            self.incoming[y].pop(x, None)
        for w in list(self.incoming.pop(x, {})):
            self.outgoing[w].pop(x, None)
        r = self.degree.pop(x)
        self.order[r].remove(x)
        if not self.order[r]:
            del self.order[r]
        del self.obj[x]
        self.origin.pop(x, None)


    def deloop(self, x: int, loop: int = 0, serial: int = None) -> Tuple[int, int]:
        """ Replace object x by its two loopless copies, shifts q+1 then q-1. """

        shifted = self.obj[x]
        sigma = shifted.smoothing
        if loop >= len(sigma.loops):
            raise NoLoopAtPositionException(f"No loop l{loop} in {sigma}")

        sign = sigma.loops[loop]
        rest, _ = sigma.without_loop(loop)
        to_plus, to_minus = cap(sigma, loop, dotted=True), cap(sigma, loop)
        from_plus, from_minus = cup(sigma, loop), cup(sigma, loop, dotted=True)

        r = self.degree[x]
        at = self.order[r].index(x)
        plus = self.add(r, ShiftedSmoothing(rest, shifted.q + 1), at=at, origin=(serial, sign, 1))
        minus = self.add(r, ShiftedSmoothing(rest, shifted.q - 1), at=at + 1, origin=(serial, sign, -1))

        for w, a in list(self.incoming.get(x, {}).items()):
            self.set(w, plus, compose_vertical(to_plus, a))
            self.set(w, minus, compose_vertical(to_minus, a))
        for y, b in list(self.outgoing.get(x, {}).items()):
            self.set(plus, y, compose_vertical(b, from_plus))
            self.set(minus, y, compose_vertical(b, from_minus))

        self.remove(x)
        return plus, minus


    def eliminate(self, x: int, y: int):
        """ Gaussian elimination of the invertible entry x -> y. """

        pivot = self.outgoing.get(x, {}).get(y)
        if pivot is None or not is_invertible_entry(pivot):
            raise NotInvertibleException(f"Entry {self.obj[x]} -> {self.obj.get(y)} is not invertible")

        inverse = 1 / next(iter(pivot.raw_items()))[1]
        deltas = [(w, m) for w, m in self.incoming[y].items() if w != x]
        gammas = [(z, m) for z, m in self.outgoing[x].items() if z != y]

        for w, delta in deltas:
            for z, gamma in gammas:
                current = self.outgoing[w].get(z)
                correction = compose_vertical(gamma, delta) * (-inverse)
                self.set(w, z, correction if current is None else current + correction)

        self.remove(x)
        self.remove(y)


    def first_looped(self) -> Optional[int]:
        for r in sorted(self.order):
            for x in self.order[r]:
                if self.obj[x].smoothing.loops:
                    return x
        return None


    def first_pivot(self) -> Optional[Tuple[int, int]]:
        for r in sorted(self.order):
            following = self.order.get(r + 1, [])
            for x in self.order[r]:
                targets = self.outgoing.get(x, {})
                if not targets:
                    continue
                for y in following:
                    m = targets.get(y)
                    if m is not None and self.obj[x] == self.obj[y] and is_invertible_entry(m):
                        return x, y
        return None


def _position_id(work: _Workspace, c: Complex, r: int, i: int) -> int:
    if not 0 <= i < len(c.at(r)):
        raise IndexError(f"No object {i} at degree {r}")
    return work.order[r][i]


def validate(c: Complex) -> List[str]:
    """
    Check that every entry joins the right smoothings with degree 0 and that d∘d = 0.

    :return: a list of violations, empty when the complex is fine.
    """

    problems = []
    for r, objs in c.objects.items():
        for i, x in enumerate(objs):
            if x.smoothing.boundary != c.boundary:
                problems.append(f"object {i} at degree {r} has boundary k={x.smoothing.k}, expected {c.boundary.k}")

    for r, matrix in c.differentials.items():
        for (j, i), m in matrix.items():
            if i >= len(c.at(r)) or j >= len(c.at(r + 1)):
                problems.append(f"entry ({j}, {i}) at degree {r} points outside the complex")
                continue
            source, target = c.at(r)[i], c.at(r + 1)[j]
            if m.source != source.smoothing or m.target != target.smoothing:
                problems.append(f"entry ({j}, {i}) at degree {r} has ends {m.source} -> {m.target}")
                continue
            d = degree(m, source.q, target.q)
            if d != 0:
                problems.append(f"entry ({j}, {i}) at degree {r} has degree {d}")

    for r in c.differentials:
        if r + 1 not in c.differentials:
            continue
        products = {}
        for (j, i), first in c.differentials[r].items():
            for (l, jj), second in c.differentials[r + 1].items():
                if jj != j:
                    continue
                step = compose_vertical(second, first)
                products[(l, i)] = step if (l, i) not in products else products[(l, i)] + step
        for (l, i), m in sorted(products.items()):
            if not m.is_zero():
                problems.append(f"d∘d is not zero from object {i} at degree {r} to object {l} at degree {r + 2}")

    return problems


def deloop(c: Complex, r: int, idx: int, loop: int = 0) -> Complex:
    """
    Delooping: the object at (r, idx) with loop `l<loop>` becomes two loopless copies with shifts q+1 and q-1
    placed at idx and idx+1, conjugating the differentials by the dotted cap / cap and cup / dotted cup pair.

    :raises NoLoopAtPositionException: if the object has no such loop.
    """

    if not 0 <= idx < len(c.at(r)) or loop >= len(c.at(r)[idx].smoothing.loops):
        raise NoLoopAtPositionException(f"No loop l{loop} at object {idx} of degree {r}")

    work = _Workspace.from_complex(c)
    work.deloop(_position_id(work, c, r, idx), loop)
    return work.to_complex()


def gaussian_eliminate(c: Complex, r: int, i: int, j: int) -> Complex:
    """
    Remove object i at degree r and object j at degree r+1 joined by an invertible entry φ,
    correcting the other entries between the two degrees to ε - γ φ^-1 δ.

    :raises NotInvertibleException: if the entry is not a nonzero scalar times an identity.
    """

    work = _Workspace.from_complex(c)
    work.eliminate(_position_id(work, c, r, i), _position_id(work, c, r + 1, j))
    return work.to_complex()


def exchange(c: Complex, r: int, i: int, j: int) -> Complex:
    """ Swap objects i and j at degree r, permuting the adjacent matrices along. """

    if i == j:
        return c

    swap = {i: j, j: i}
    objects = dict(c.objects)
    objs = list(objects[r])
    objs[i], objs[j] = objs[j], objs[i]
    objects[r] = objs

    differentials = {s: dict(matrix) for s, matrix in c.differentials.items()}
    if r - 1 in differentials:
        differentials[r - 1] = {(swap.get(b, b), a): m for (b, a), m in c.differentials[r - 1].items()}
    if r in differentials:
        differentials[r] = {(b, swap.get(a, a)): m for (b, a), m in c.differentials[r].items()}
    return Complex(c.boundary, objects, differentials)


def _check_step(work: _Workspace, step: str):
    problems = validate(work.to_complex())
    if problems:
        raise InvalidComplexException(f"Complex broken after {step}: " + "; ".join(problems))


def reduce(c: Complex, journal: List[Dict] = None, check: bool = False) -> Complex:
    """
    Deloop every loop, then eliminate invertible entries until none is left. Both scans go through the objects
    in numeration order, so the result is deterministic.

    :param journal: if a list is given, one dict per step is appended to it. Eliminations report the origin of
                    both removed objects: None, or (deloop serial, loop sign, +1 or -1 for the q+1 or q-1 copy).
                    A final `survivors` event lists the origins of the remaining objects.
    :param check: validate the complex after every deloop and every elimination, raising
                  InvalidComplexException on the first broken step.
    """

    work = _Workspace.from_complex(c)
    serials = count()

    x = work.first_looped()
    while x is not None:
        shifted = work.obj[x]
        serial = next(serials)
        if journal is not None:
            journal.append({'event': 'deloop', 'degree': work.degree[x], 'serial': serial,
                            'sign': shifted.smoothing.loops[0], 'q': shifted.q})
        logger.debug(f"Delooping {shifted} at degree {work.degree[x]}")
        work.deloop(x, 0, serial=serial)
        if check:
            _check_step(work, f"deloop {serial}")
        x = work.first_looped()

    pivot = work.first_pivot()
    while pivot is not None:
        x, y = pivot
        r = work.degree[x]
        if journal is not None:
            journal.append({'event': 'eliminate', 'degree': work.degree[x], 'q': work.obj[x].q,
                            'removed': (work.origin.get(x), work.origin.get(y))})
        logger.debug(f"Eliminating {work.obj[x]} at degree {work.degree[x]}")
        work.eliminate(x, y)
        if check:
            _check_step(work, f"elimination at degree {r}")
        pivot = work.first_pivot()

    if journal is not None:
        journal.append({'event': 'survivors', 'origins': [work.origin.get(x) for x in work.obj]})

    return work.to_complex()


def numerate(c: Complex) -> Dict[Tuple[int, int], int]:
    """ The numeration: positions (r, i) numbered 1..N through the degrees, then along each vector. """

    return {position: g for g, position in enumerate(c.positions(), start=1)}


def is_diagonal(c: Complex) -> Optional[Fraction]:
    """
    The rotation constant C such that 2r minus the shifted rotation number is C for every object,
    or None if there is no such constant (the zero complex included).
    """

    values = {2 * r - shifted_rotation(x) for r, objs in c.objects.items() for x in objs}
    if len(values) != 1:
        return None
    return values.pop()


def partial_closure(c: Complex, ops: Sequence) -> Complex:
    """
    Apply the unary diagrams `ops` one after another.

    :raises IncompatibleException: if an operator does not fit the boundary of the running result.
    """

    from khrot.planar import compose_complexes

    for op in ops:
        if op.input_ks != (c.boundary.k,):
            raise IncompatibleException(f"A unary operator on k={op.input_ks} cannot close a complex with "
                                        f"k={c.boundary.k}")
        c = compose_complexes(op, [c])
    return c


@dataclass(frozen=True)
class CoherenceReport:
    ok: bool
    constant: Optional[Fraction] = None
    witness: Tuple[Tuple[int, int, int], ...] = ()
    checked: int = 0

    def __bool__(self):
        return self.ok


def is_coherently_diagonal(c: Complex, max_depth: int = None) -> CoherenceReport:
    """
    Check that `c` reduces to a diagonal complex with constant C, and that every sequence of single curl closures
    of length below k reduces to a diagonal complex with constant C minus the sum of the closures' R_D.

    Closures are enumerated at every boundary position; the curl sign is forced by the orientation
    of the two points it joins. The witness of a failure is the sequence of (k, position, sign) closures.

    :param max_depth: optional cap on the closure sequence length.
    """

    from khrot.planar import classify, compose_complexes, unary_basic

    base = reduce(c)
    constant = is_diagonal(base)
    if constant is None:
        return CoherenceReport(False, None, (), 1)

    limit = max(c.boundary.k - 1, 0)
    if max_depth is not None:
        limit = min(limit, max_depth)

    checked = 1
    stack = [(base, constant, ())]
    while stack:
        current, expected, path = stack.pop()
        if len(path) >= limit:
            continue

        k = current.boundary.k
        for position in reversed(range(2 * k)):
            sign = 1 if position % 2 else -1
            op = unary_basic(k, position, sign)
            closed = reduce(compose_complexes(op, [current]))
            wanted = expected - classify(op).rotation
            step = path + ((k, position, sign),)
            checked += 1
            if is_diagonal(closed) != wanted:
                logger.info(f"Closure sequence {step} is not diagonal with constant {wanted}")
                return CoherenceReport(False, constant, step, checked)
            stack.append((closed, wanted, step))

    return CoherenceReport(True, constant, (), checked)


def matrix_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """ Exact rank over the rationals. """

    if not rows or not ncols:
        return 0
    dm = DomainMatrix([[QQ(x.numerator, x.denominator) for x in row] for row in rows], (len(rows), ncols), QQ)
    return dm.rank()


def homology_ranks(dims: Mapping[int, int],
                   maps: Mapping[int, Mapping[Tuple[int, int], Fraction]]) -> Dict[int, int]:
    """
    Homology dimensions of a complex of rational vector spaces.

    :param dims:    degree -> dimension.
    :param maps:    degree r -> sparse matrix {(row in degree r+1, column in degree r): value}.
    """

    ranks = {}
    for r, n in dims.items():
        m = maps.get(r, {})
        rows = [[Fraction(0)] * n for _ in range(dims.get(r + 1, 0))]
        for (j, i), value in m.items():
            rows[j][i] = Fraction(value)
        ranks[r] = matrix_rank(rows, n)

    return {r: n - ranks.get(r, 0) - ranks.get(r - 1, 0) for r, n in dims.items()
            if n - ranks.get(r, 0) - ranks.get(r - 1, 0)}


class HomologyTable:
    """
    Finitely supported map (i, j) -> dimension, i the homological and j the quantum degree.
    """

    def __init__(self, entries: Mapping[Tuple[int, int], int] = None):
        self._entries = {(int(i), int(j)): int(v) for (i, j), v in (entries or {}).items() if v}


    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._entries.get(key, 0)


    def items(self):
        return sorted(self._entries.items(), key=lambda x: (x[0][1], x[0][0]))


    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self._entries)


    @property
    def total_dimension(self) -> int:
        return sum(self._entries.values())


    def __eq__(self, other):
        if isinstance(other, HomologyTable):
            return self._entries == other._entries
        if isinstance(other, dict):
            return self._entries == {key: v for key, v in other.items() if v}
        return NotImplemented


    __hash__ = None


    def __repr__(self):
        return f"HomologyTable({dict(self.items())})"


    def poincare_polynomial(self):
        """ Sum of dim * t^i * q^j as a sympy expression. """

        q, t = sympy.symbols('q t')
        return sympy.expand(sum((v * t ** i * q ** j for (i, j), v in self._entries.items()), sympy.Integer(0)))


    def euler_characteristic(self):
        """ Graded Euler characteristic: sum of (-1)^i * dim * q^j. """

        q = sympy.Symbol('q')
        return sympy.expand(sum(((-1) ** i * v * q ** j for (i, j), v in self._entries.items()), sympy.Integer(0)))


    def to_tsv(self) -> str:
        """ Rows are quantum degrees from the top down, columns homological degrees left to right. """

        if not self._entries:
            return "j\\i\n"
        columns = list(range(min(i for i, _ in self._entries), max(i for i, _ in self._entries) + 1))
        rows = sorted({j for _, j in self._entries}, reverse=True)
        lines = ["\t".join(["j\\i"] + [str(i) for i in columns])]
        for j in rows:
            lines.append("\t".join([str(j)] + [str(self[(i, j)]) if self[(i, j)] else "" for i in columns]))
        return "\n".join(lines) + "\n"


    def to_dict(self) -> Dict:
        return {'entries': [{'i': i, 'j': j, 'dim': v} for (i, j), v in self.items()],
                'total_dimension': self.total_dimension}


    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def homology_table(c: Complex) -> HomologyTable:
    """
    Bigraded homology of a closed complex: reduce it, then in every quantum degree take kernels modulo images
    of the scalar matrices that remain.

    :raises NotClosedException: if the complex has boundary points.
    """

    if c.boundary.k != 0:
        raise NotClosedException(f"Homology needs a closed complex, got k={c.boundary.k}")

    reduced = reduce(c)
    by_q = defaultdict(lambda: defaultdict(list))
    for r, objs in reduced.objects.items():
        for i, x in enumerate(objs):
            by_q[x.q][r].append(i)

    table = {}
    for q, positions in by_q.items():
        local = {r: {i: n for n, i in enumerate(idx)} for r, idx in positions.items()}
        maps = defaultdict(dict)
        for r, matrix in reduced.differentials.items():
            for (j, i), m in matrix.items():
                if i in local.get(r, {}) and j in local.get(r + 1, {}):
                    maps[r][(local[r + 1][j], local[r][i])] = sum((v for _, v in m.raw_items()), Fraction(0))
        for r, dim in homology_ranks({r: len(idx) for r, idx in positions.items()}, maps).items():
            table[(r, q)] = dim

    return HomologyTable(table)
