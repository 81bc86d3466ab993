import unittest

from fractions import Fraction

from hypothesis import given, strategies as st

from khrot.components.exceptions import *
from khrot.smoothing import *


class smoothing_UnitTestCase(unittest.TestCase):

    def test_make_smoothing__sorts_strands_and_loops(self):
        s = make_smoothing(2, [(2, 3), (0, 1)], [1, -1])

        self.assertEqual(s.strands, ((0, 1), (2, 3)))
        self.assertEqual(s.loops, (-1, 1))
        self.assertEqual(s.string_ids(), ['s0', 's2', 'l0', 'l1'])


    def test_make_smoothing__not_perfect_matching(self):
        self.assertRaises(NotPerfectMatchingException, make_smoothing, 2, [(0, 1)])
        self.assertRaises(NotPerfectMatchingException, make_smoothing, 2, [(0, 1), (0, 3)])
        self.assertRaises(NotPerfectMatchingException, make_smoothing, 1, [(0, 1), (2, 3)])


    def test_make_smoothing__crossing(self):
        self.assertRaises(CrossingMatchingException, make_smoothing, 2, [(0, 2), (1, 3)])


    def test_make_smoothing__orientation(self):
        # Strand must go from an even point to an odd one
        self.assertRaises(BadOrientationException, make_smoothing, 1, [(1, 0)])
        self.assertRaises(BadOrientationException, make_smoothing, 1, [(0, 1)], [2])
        self.assertRaises(BadOrientationException, BoundaryConfig, -1)


    def test_boundary_config(self):
        b = BoundaryConfig(3)

        self.assertEqual(b.size, 6)
        self.assertEqual(b.orientation(0), IN)
        self.assertEqual(b.orientation(5), OUT)
        self.assertEqual(list(b.points()), list(range(6)))


    def test_endpoints_and_partner(self):
        s = make_smoothing(2, [(0, 3), (2, 1)], [1])

        self.assertEqual(s.endpoints('s0'), (0, 3))
        self.assertEqual(s.endpoints('s2'), (2, 1))
        self.assertEqual(s.endpoints('l0'), ())
        self.assertEqual(s.partner(1), 2)
        self.assertEqual(s.strand_at(3), 's0')
        self.assertEqual(s.loop_sign('l0'), 1)
        self.assertRaises(StrandNotFoundException, s.endpoints, 's1')
        self.assertRaises(StrandNotFoundException, s.endpoints, 'l1')


    def test_strand_rotation(self):
        s = make_smoothing(2, [(0, 1), (2, 3)])

        self.assertEqual(strand_rotation(s, 's0'), Fraction(-1, 4))
        self.assertEqual(strand_rotation(s, (0, 1)), Fraction(-1, 4))
        self.assertEqual(strand_rotation(s, (1, 0)), Fraction(1, 4))
        self.assertRaises(StrandNotFoundException, strand_rotation, s, (0, 3))
        self.assertRaises(StrandNotFoundException, strand_rotation, s, 'l0')


    def test_rotation_number(self):
        self.assertEqual(rotation_number(make_smoothing(1, [(0, 1)])), 0)
        self.assertEqual(rotation_number(make_smoothing(2, [(0, 1), (2, 3)])), Fraction(-1, 2))
        self.assertEqual(rotation_number(make_smoothing(2, [(0, 3), (2, 1)])), Fraction(1, 2))
        self.assertEqual(rotation_number(make_smoothing(0, loops=[1, 1, -1])), 1)
        self.assertEqual(rotation_number(EMPTY), 0)


    def test_shifted_rotation(self):
        ss = ShiftedSmoothing(make_smoothing(2, [(0, 3), (2, 1)], [-1]), 2)

        self.assertEqual(shifted_rotation(ss), Fraction(3, 2))
        self.assertEqual(shifted_rotation(ss.shifted(-1)), Fraction(1, 2))


    def test_with_and_without_loop(self):
        s = make_smoothing(1, [(0, 1)], [-1, 1])

        added, loop_id, renaming = s.with_loop(-1)
        self.assertEqual(added.loops, (-1, -1, 1))
        self.assertEqual(loop_id, 'l1')
        self.assertEqual(renaming, {'s0': 's0', 'l0': 'l0', 'l1': 'l2'})

        removed, renaming = added.without_loop(0)
        self.assertEqual(removed.loops, (-1, 1))
        self.assertEqual(renaming, {'s0': 's0', 'l1': 'l0', 'l2': 'l1'})

        self.assertRaises(StrandNotFoundException, s.without_loop, 2)
        self.assertRaises(BadOrientationException, s.with_loop, 0)


    def test_all_smoothings__catalan(self):
        for k, count in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)]:
            self.assertEqual(len(all_smoothings(k)), count)
            self.assertEqual(len(set(all_smoothings(k))), count)


    def test_text_form(self):
        s = make_smoothing(2, [(0, 1), (2, 3)], [1])

        self.assertEqual(str(s), "S(k=2; 0-1, 2-3; loops=+1)")
        self.assertEqual(parse_smoothing(str(s)), s)
        self.assertEqual(str(EMPTY), "S(k=0)")
        self.assertEqual(str(ShiftedSmoothing(s, -2)), "S(k=2; 0-1, 2-3; loops=+1){-2}")
        self.assertRaises(SmoothingException, parse_smoothing, "T(k=1)")


    @given(st.integers(min_value=1, max_value=4), st.lists(st.sampled_from([1, -1]), max_size=3))
    def test_mirror_negates_rotation(self, k, loops):
        for s in all_smoothings(k, loops):
            self.assertEqual(rotation_number(mirror(s)), -rotation_number(s))
            self.assertEqual(mirror(mirror(s)), s)


    @given(st.integers(min_value=1, max_value=4))
    def test_rotation_is_half_integer(self, k):
        for s in all_smoothings(k):
            self.assertEqual((2 * rotation_number(s)).denominator, 1)


if __name__ == '__main__':
    unittest.main()
