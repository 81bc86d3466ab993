import json
import unittest

from fractions import Fraction
from unittest import mock

from khrot.components.exceptions import *
from khrot.cobordism import identity_cobordism
from khrot.complex import *
from khrot.khovanov import crossing_complex
from khrot.planar import binary_basic, compose_complexes, unary_basic
from khrot.smoothing import EMPTY, BoundaryConfig, ShiftedSmoothing, make_smoothing


class Complex_UnitTestCase(unittest.TestCase):

    def setUp(self):
        self.strand = make_smoothing(1, [(0, 1)])
        self.strand_loop = make_smoothing(1, [(0, 1)], [1])
        self.negative = crossing_complex(-1)
        self.positive = crossing_complex(1)


    def omega_two(self) -> Complex:
        """ Two negative crossings glued along one edge, moved one degree up. """

        return compose_complexes(binary_basic(2, 2, 1, 0), [self.negative, self.negative]).shifted(h=1)


    def test_crossing_complexes_are_valid(self):
        self.assertEqual(validate(self.negative), [])
        self.assertEqual(validate(self.positive), [])
        self.assertEqual(self.negative.amplitude, (-1, 0))
        self.assertEqual(self.positive.amplitude, (0, 1))
        self.assertEqual([x.q for r in self.positive.degrees for x in self.positive.at(r)], [1, 2])


    def test_validate__reports_bad_degree(self):
        zero, one = self.positive.at(0)[0], self.positive.at(1)[0]
        bad = Complex(BoundaryConfig(2), {0: [zero], 1: [ShiftedSmoothing(one.smoothing, zero.q)]},
                      {0: {(0, 0): self.positive.entry(0, 0, 0)}})

        problems = validate(bad)
        self.assertEqual(len(problems), 1)
        self.assertIn("degree -1", problems[0])


    def test_validate__reports_nonzero_square(self):
        x = ShiftedSmoothing(self.strand, 0)
        identity = identity_cobordism(self.strand)
        bad = Complex(BoundaryConfig(1), {0: [x], 1: [x], 2: [x]}, {0: {(0, 0): identity}, 1: {(0, 0): identity}})

        self.assertTrue(any("d∘d" in problem for problem in validate(bad)))


    def test_zero_entries_and_empty_degrees_dropped(self):
        c = Complex(BoundaryConfig(1), {0: [ShiftedSmoothing(self.strand, 0)], 1: []},
                    {0: {(0, 0): identity_cobordism(self.strand) * 0}})

        self.assertEqual(c.degrees, [0])
        self.assertEqual(c.differentials, {})
        self.assertIsNone(Complex.zero(3).amplitude)


    def test_deloop(self):
        c = Complex.single(ShiftedSmoothing(self.strand_loop, 3), r=2)
        delooped = deloop(c, 2, 0)

        self.assertEqual(delooped.at(2), (ShiftedSmoothing(self.strand, 4), ShiftedSmoothing(self.strand, 2)))
        self.assertRaises(NoLoopAtPositionException, deloop, c, 2, 0, 1)
        self.assertRaises(NoLoopAtPositionException, deloop, delooped, 2, 0)


    def test_deloop__keeps_differentials_valid(self):
        closed = compose_complexes(unary_basic(2, 1, 1), [self.negative])
        index = next(i for i, x in enumerate(closed.at(0)) if x.smoothing.loops)

        self.assertEqual(validate(deloop(closed, 0, index)), [])


    def test_gaussian_eliminate(self):
        x = ShiftedSmoothing(self.strand, 0)
        c = Complex(BoundaryConfig(1), {0: [x], 1: [x]}, {0: {(0, 0): identity_cobordism(self.strand) * -2}})

        self.assertEqual(gaussian_eliminate(c, 0, 0, 0), Complex.zero(1))
        self.assertRaises(NotInvertibleException, gaussian_eliminate, self.positive, 0, 0, 0)


    def test_exchange(self):
        c = self.omega_two()
        self.assertEqual(len(c.at(0)), 2)

        swapped = exchange(c, 0, 0, 1)
        self.assertEqual(swapped.at(0), tuple(reversed(c.at(0))))
        self.assertEqual(validate(swapped), [])
        self.assertEqual(exchange(swapped, 0, 0, 1), c)
        self.assertEqual(exchange(c, 0, 1, 1), c)


    def test_single_curl_on_negative_crossing(self):
        """ The kink closed at an Out point: the loop is counterclockwise and its lower copy cancels. """

        journal = []
        closed = compose_complexes(unary_basic(2, 1, 1), [self.negative])
        self.assertEqual(validate(closed), [])
        self.assertEqual(is_diagonal(closed), 0)

        reduced = reduce(closed, journal)
        self.assertEqual(reduced.objects, {0: (ShiftedSmoothing(self.strand, 0),)})
        self.assertEqual(is_diagonal(reduced), 0)

        self.assertEqual([x['event'] for x in journal], ['deloop', 'eliminate', 'survivors'])
        self.assertEqual(journal[0]['sign'], 1)
        self.assertEqual(journal[1]['removed'], (None, (0, 1, -1)))
        self.assertEqual(journal[2]['origins'], [(0, 1, 1)])


    def test_single_curl_at_in_point(self):
        """ The kink closed at an In point: the loop is clockwise and its upper copy cancels. """

        journal = []
        reduced = reduce(partial_closure(self.negative, [unary_basic(2, 0, -1)]), journal)

        self.assertEqual(reduced.objects, {-1: (ShiftedSmoothing(self.strand, -3),)})
        self.assertEqual(is_diagonal(reduced), 1)
        self.assertEqual(journal[0]['sign'], -1)
        self.assertEqual(journal[1]['removed'][0], (0, -1, 1))


    def test_reduce__check(self):
        closed = compose_complexes(unary_basic(2, 1, 1), [self.negative])
        self.assertEqual(reduce(closed, check=True), reduce(closed))

        with mock.patch('khrot.complex.validate', return_value=['entry (0, 0) at degree 0 is broken']):
            with self.assertRaises(InvalidComplexException) as context:
                reduce(closed, check=True)
            self.assertIn('deloop 0', str(context.exception))

            # Without the flag nothing is checked
            reduce(closed)


    def test_omega_two(self):
        c = self.omega_two()

        self.assertEqual(validate(c), [])
        self.assertEqual(is_diagonal(c), 3)
        self.assertEqual(is_diagonal(reduce(c)), 3)


    def test_omega_two__negative_closure(self):
        journal = []
        closed = reduce(partial_closure(self.omega_two(), [unary_basic(3, 0, -1)]), journal)

        self.assertEqual(validate(closed), [])
        self.assertEqual(is_diagonal(closed), Fraction(7, 2))

        # Surviving copies are the q+1 copy of a positive loop and the q-1 copy of a negative one
        survivors = journal[-1]['origins']
        self.assertTrue(survivors)
        for origin in survivors:
            if origin is not None:
                _, sign, copy = origin
                self.assertEqual(sign, copy)


    def test_partial_closure__incompatible(self):
        self.assertRaises(IncompatibleException, partial_closure, self.positive, [unary_basic(1, 1, 1)])
        self.assertEqual(partial_closure(self.positive, []), self.positive)


    def test_numerate(self):
        self.assertEqual(numerate(self.negative), {(-1, 0): 1, (0, 0): 2})
        self.assertEqual(sorted(numerate(self.omega_two()).values()), [1, 2, 3, 4])


    def test_is_diagonal(self):
        self.assertEqual(is_diagonal(self.negative), Fraction(1, 2))
        self.assertEqual(is_diagonal(self.positive), Fraction(-1, 2))
        self.assertEqual(is_diagonal(self.negative.shifted(h=1, q=1)), Fraction(3, 2))
        self.assertIsNone(is_diagonal(Complex.zero()))

        mixed = Complex(BoundaryConfig(1), {0: [ShiftedSmoothing(self.strand, 0), ShiftedSmoothing(self.strand, 2)]})
        self.assertIsNone(is_diagonal(mixed))


    def test_is_coherently_diagonal__crossings(self):
        for c, constant in ((self.negative, Fraction(1, 2)), (self.positive, Fraction(-1, 2))):
            report = is_coherently_diagonal(c)
            self.assertTrue(report)
            self.assertEqual(report.constant, constant)
            self.assertEqual(report.checked, 5)


    def test_is_coherently_diagonal__omega_two(self):
        report = is_coherently_diagonal(self.omega_two())

        self.assertTrue(report.ok)
        self.assertEqual(report.constant, 3)
        self.assertEqual(is_coherently_diagonal(self.omega_two(), max_depth=0).checked, 1)


    def test_is_coherently_diagonal__not_diagonal(self):
        mixed = Complex(BoundaryConfig(1), {0: [ShiftedSmoothing(self.strand, 0), ShiftedSmoothing(self.strand, 2)]})
        report = is_coherently_diagonal(mixed)

        self.assertFalse(report)
        self.assertIsNone(report.constant)


    def test_matrix_rank(self):
        self.assertEqual(matrix_rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], 2), 1)
        self.assertEqual(matrix_rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1, 3)]], 2), 2)
        self.assertEqual(matrix_rank([], 3), 0)


    def test_homology_ranks(self):
        self.assertEqual(homology_ranks({0: 1, 1: 1}, {0: {(0, 0): Fraction(1)}}), {})
        self.assertEqual(homology_ranks({0: 1, 1: 1}, {}), {0: 1, 1: 1})
        self.assertEqual(homology_ranks({0: 2, 1: 1}, {0: {(0, 0): Fraction(1), (0, 1): Fraction(-1)}}), {0: 1})


    def test_homology_table__closed_objects(self):
        empty = Complex.single(ShiftedSmoothing(EMPTY, 0))
        circle = Complex.single(ShiftedSmoothing(make_smoothing(0, loops=[-1]), 2), r=1)

        self.assertEqual(homology_table(empty), {(0, 0): 1})
        self.assertEqual(homology_table(circle), {(1, 3): 1, (1, 1): 1})
        self.assertEqual(homology_table(Complex.zero()).total_dimension, 0)
        self.assertRaises(NotClosedException, homology_table, self.positive)


    def test_homology_table__formats(self):
        table = HomologyTable({(0, 1): 1, (0, -1): 1, (2, 5): 1, (1, 3): 0})

        self.assertEqual(table.total_dimension, 3)
        self.assertEqual(table[(1, 3)], 0)
        self.assertEqual([key for key, _ in table.items()], [(0, -1), (0, 1), (2, 5)])
        self.assertEqual(table.to_tsv(), "j\\i\t0\t1\t2\n5\t\t\t1\n1\t1\t\t\n-1\t1\t\t\n")
        self.assertEqual(HomologyTable().to_tsv(), "j\\i\n")

        data = json.loads(table.to_json())
        self.assertEqual(data['total_dimension'], 3)
        self.assertEqual(data['entries'][0], {'i': 0, 'j': -1, 'dim': 1})


    def test_homology_table__polynomials(self):
        import sympy

        q, t = sympy.symbols('q t')
        table = HomologyTable({(0, 1): 1, (0, -1): 1, (2, 5): 1, (3, 9): 2})

        self.assertEqual(sympy.expand(table.poincare_polynomial() - (q + 1 / q + t ** 2 * q ** 5 + 2 * t ** 3 * q ** 9)),
                         0)
        self.assertEqual(sympy.expand(table.euler_characteristic() - (q + 1 / q + q ** 5 - 2 * q ** 9)), 0)


    def test_dump_and_load(self):
        c = self.omega_two()

        self.assertEqual(load_complex(c.dump()), c)
        self.assertEqual(load_complex(json.loads(c.dump())), c)


if __name__ == '__main__':
    unittest.main()
