import json
import unittest

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from khrot.components.exceptions import *
from khrot.cobordism import identity_cobordism, saddle
from khrot.complex import numerate, validate
from khrot.khovanov import crossing_complex
from khrot.planar import *
from khrot.smoothing import all_smoothings, make_smoothing, rotation_number


@st.composite
def unary_diagrams(draw):
    k = draw(st.integers(min_value=1, max_value=4))
    position = draw(st.integers(min_value=0, max_value=2 * k - 1))
    return unary_basic(k, position, 1 if position % 2 else -1)


@st.composite
def binary_diagrams(draw):
    k1 = draw(st.integers(min_value=1, max_value=3))
    k2 = draw(st.integers(min_value=1, max_value=3))
    p1 = draw(st.integers(min_value=0, max_value=2 * k1 - 1))
    p2 = draw(st.sampled_from([p for p in range(2 * k2) if p % 2 != p1 % 2]))
    return binary_basic(k1, k2, p1, p2)


class planar_UnitTestCase(unittest.TestCase):

    def setUp(self):
        self.flat = make_smoothing(2, [(0, 1), (2, 3)])
        self.turned = make_smoothing(2, [(0, 3), (2, 1)])
        self.strand = make_smoothing(1, [(0, 1)])


    def tearDown(self):
        set_rotation_check(False)


    def test_classify__unary(self):
        self.assertEqual(classify(unary_basic(2, 1, 1)).rotation, Fraction(1, 2))
        self.assertEqual(classify(unary_basic(2, 0, -1)).rotation, Fraction(-1, 2))
        self.assertEqual(classify(unary_basic(3, 0, -1)).rotation, Fraction(-1, 2))
        self.assertEqual(classify(unary_basic(1, 1, 1)).rotation, 1)
        self.assertEqual(classify(unary_basic(1, 0, -1)).rotation, -1)

        counts = classify(unary_basic(3, 2, -1))
        self.assertEqual((counts.curls, counts.interconnecting, counts.boundary), (1, 0, 4))
        self.assertEqual(counts.i_d, 1)
        self.assertEqual(counts.w_d, 1)


    def test_classify__binary_and_trivial(self):
        counts = classify(binary_basic(2, 2, 1, 0))

        self.assertEqual((counts.curls, counts.interconnecting, counts.boundary), (0, 1, 6))
        self.assertEqual(counts.rotation, 0)
        self.assertEqual(classify(PlanarArcDiagram.radial(3)).rotation, 0)
        self.assertEqual(classify(PlanarArcDiagram.juxtaposition(3)).rotation, 0)


    def test_unary_basic__sign_is_forced(self):
        self.assertRaises(IncompatibleException, unary_basic, 2, 1, -1)
        self.assertRaises(IncompatibleException, unary_basic, 2, 4, -1)
        self.assertRaises(IncompatibleException, unary_basic, 0, 0, -1)


    def test_binary_basic__orientation(self):
        self.assertRaises(OrientationClashException, binary_basic, 2, 2, 1, 1)
        self.assertRaises(IncompatibleException, binary_basic, 1, 2, 2, 1)
        self.assertEqual(binary_basic(1, 1, 1, 0).output_k, 1)


    def test_make_diagram__errors(self):
        self.assertRaises(NotTypeAException, make_diagram,
                          {'output_k': 1, 'inputs': [], 'arcs': [[[0, 0], [0, 1]]]})
        self.assertRaises(OrientationClashException, make_diagram,
                          {'output_k': 1, 'inputs': [1], 'arcs': [[[1, 0], [0, 0]], [[0, 1], [1, 1]]]})
        self.assertRaises(CrossingArcsException, make_diagram,
                          {'output_k': 0, 'inputs': [3], 'outer': [1, 0],
                           'arcs': [[[1, 1], [1, 4]], [[1, 3], [1, 0]], [[1, 5], [1, 2]]]})
        self.assertRaises(DiagramException, make_diagram,
                          {'output_k': 0, 'inputs': [1], 'arcs': [[[1, 1], [1, 0]]]})
        self.assertRaises(DiagramException, make_diagram,
                          {'output_k': 1, 'inputs': [1, 1],
                           'arcs': [[[1, 1], [1, 0]], [[0, 0], [2, 0]], [[2, 1], [0, 1]]]})
        self.assertRaises(DiagramException, make_diagram,
                          {'output_k': 1, 'inputs': [1], 'arcs': [[[0, 0], [1, 0]]]})


    def test_make_diagram__json(self):
        d = unary_basic(1, 1, 1)

        self.assertEqual(make_diagram(d.to_json()), d)
        self.assertEqual(json.loads(d.to_json())['outer'], [1, 0])
        self.assertEqual(make_diagram(binary_basic(2, 1, 0, 1).to_dict()), binary_basic(2, 1, 0, 1))


    def test_compose_smoothings__loops(self):
        self.assertEqual(compose_smoothings(unary_basic(2, 1, 1), [self.turned]),
                         make_smoothing(1, [(0, 1)], [1]))
        self.assertEqual(compose_smoothings(unary_basic(2, 1, 1), [self.flat]), self.strand)
        self.assertEqual(compose_smoothings(unary_basic(2, 0, -1), [self.flat]),
                         make_smoothing(1, [(0, 1)], [-1]))
        self.assertEqual(compose_smoothings(unary_basic(1, 1, 1), [self.strand]).loops, (1,))
        self.assertEqual(compose_smoothings(unary_basic(1, 0, -1), [self.strand]).loops, (-1,))


    def test_compose_smoothings__radial_and_side_by_side(self):
        for s in all_smoothings(3, [1]):
            self.assertEqual(compose_smoothings(PlanarArcDiagram.radial(3), [s]), s)

        loops = [make_smoothing(0, loops=[1]), make_smoothing(0), make_smoothing(0, loops=[-1, 1])]
        self.assertEqual(compose_smoothings(PlanarArcDiagram.juxtaposition(3), loops).loops, (-1, 1, 1))


    def test_compose_smoothings__boundary_mismatch(self):
        self.assertRaises(BoundaryMismatchException, compose_smoothings, unary_basic(2, 1, 1), [self.strand])
        self.assertRaises(BoundaryMismatchException, compose_smoothings, binary_basic(2, 2, 1, 0), [self.flat])


    def test_trace_composition__provenance(self):
        result, provenance = trace_composition(unary_basic(2, 1, 1), (self.turned,))
        provenance = dict(provenance)

        self.assertEqual(result.loops, (1,))
        self.assertEqual(provenance[(1, 's2')], 'l0')
        self.assertEqual(provenance[(1, 's0')], 's0')
        self.assertEqual(provenance[('arc', 0)], 'l0')


    @settings(max_examples=40, deadline=None)
    @given(unary_diagrams())
    def test_rotation_is_additive__unary(self, d):
        rotation = classify(d).rotation
        for s in all_smoothings(d.input_ks[0], [1]):
            self.assertEqual(rotation_number(compose_smoothings(d, [s])), rotation + rotation_number(s))


    @settings(max_examples=40, deadline=None)
    @given(binary_diagrams())
    def test_rotation_is_additive__binary(self, d):
        rotation = classify(d).rotation
        for first in all_smoothings(d.input_ks[0]):
            for second in all_smoothings(d.input_ks[1], [-1]):
                expected = rotation + rotation_number(first) + rotation_number(second)
                self.assertEqual(rotation_number(compose_smoothings(d, [first, second])), expected)


    def test_rotation_check_switch(self):
        set_rotation_check(True)

        composite = compose_smoothings(unary_basic(3, 3, 1), [make_smoothing(3, [(0, 5), (2, 1), (4, 3)])])
        self.assertEqual(composite.k, 2)


    def test_compose_cobordisms__identity(self):
        for d, s in ((unary_basic(2, 1, 1), self.turned), (binary_basic(2, 1, 3, 0), self.flat)):
            sources = [s] if d.d == 1 else [s, self.strand]
            composite = compose_cobordisms(d, [identity_cobordism(x) for x in sources])
            self.assertEqual(composite, identity_cobordism(compose_smoothings(d, sources)))


    def test_compose_cobordisms__functorial(self):
        d = unary_basic(2, 1, 1)
        there = saddle(self.flat, self.turned)
        back = saddle(self.turned, self.flat)

        self.assertEqual(compose_cobordisms(d, [back.compose(there)]),
                         compose_cobordisms(d, [back]).compose(compose_cobordisms(d, [there])))


    def test_object_tuples(self):
        negative = crossing_complex(-1)
        tuples = object_tuples([negative, negative])

        self.assertEqual(tuples[-2], [((-1, 0), (-1, 0))])
        self.assertEqual(tuples[-1], [((0, 0), (-1, 0)), ((-1, 0), (0, 0))])
        self.assertEqual(tuples[0], [((0, 0), (0, 0))])


    def test_compose_complexes__signs(self):
        d = binary_basic(2, 2, 1, 0)
        negative = crossing_complex(-1)
        c = compose_complexes(d, [negative, negative])

        self.assertEqual(validate(c), [])
        zero = negative.at(-1)[0].smoothing
        step = negative.entry(-1, 0, 0)
        self.assertEqual(c.entry(-2, 0, 0), compose_cobordisms(d, [step, identity_cobordism(zero)]))
        self.assertEqual(c.entry(-2, 1, 0), compose_cobordisms(d, [identity_cobordism(zero), step]) * -1)


    def test_compose_complexes__block_lower_triangular(self):
        """ Ordered by the numeration of the last input, no differential entry goes back to an earlier block. """

        psi = compose_complexes(binary_basic(2, 2, 1, 0), [crossing_complex(-1), crossing_complex(-1)])
        phi = crossing_complex(1)
        numeration = numerate(phi)
        tuples = object_tuples([psi, phi])

        for p1 in range(6):
            for p2 in range(1 - p1 % 2, 4, 2):
                c = compose_complexes(binary_basic(3, 2, p1, p2), [psi, phi])
                self.assertEqual(validate(c), [])
                for r, matrix in c.differentials.items():
                    for j, i in matrix:
                        self.assertGreaterEqual(numeration[tuples[r + 1][j][-1]], numeration[tuples[r][i][-1]],
                                                (p1, p2, r, j, i))


    def test_compose_complexes__loops_stay_valid(self):
        for sign in (1, -1):
            for position in range(4):
                d = unary_basic(2, position, 1 if position % 2 else -1)
                self.assertEqual(validate(compose_complexes(d, [crossing_complex(sign)])), [])

        d = binary_basic(2, 2, 3, 2)
        self.assertEqual(validate(compose_complexes(d, [crossing_complex(1), crossing_complex(-1, 1)])), [])


    def test_compose_complexes__mismatch(self):
        self.assertRaises(BoundaryMismatchException, compose_complexes, binary_basic(2, 2, 1, 0),
                          [crossing_complex(1)])
        self.assertRaises(BoundaryMismatchException, compose_complexes, unary_basic(1, 1, 1),
                          [crossing_complex(1)])


if __name__ == '__main__':
    unittest.main()
