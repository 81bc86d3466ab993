import unittest

from khrot.components.helpers import *


class helpers_UnitTestCase(unittest.TestCase):

    def test_first_or_none(self):
        self.assertEqual(first_or_none([1, 2, 3], lambda x: x > 1), 2)
        self.assertEqual(first_or_none(range(4), lambda x: x == 0), 0)
        self.assertEqual(first_or_none(['a', 'b']), 'a')
        self.assertIsNone(first_or_none([1, 2], lambda x: x > 5))
        self.assertIsNone(first_or_none([]))


    def test_recursive_update(self):
        d = {'a': 1, 'nested': {'x': 1, 'y': 2}, 'seq': [1, 2], 'keep': None}
        u = {'a': 2, 'nested': {'y': 3, 'z': 4}, 'seq': (2, 3), 'new': {'k': 'v'}}

        result = recursive_update(d, u)

        self.assertEqual(result, {'a': 2, 'nested': {'x': 1, 'y': 3, 'z': 4}, 'seq': [1, 2, 3], 'keep': None,
                                  'new': {'k': 'v'}})
        self.assertEqual(d['nested'], {'x': 1, 'y': 2}, "Original dictionary must not change")


    def test_recursive_update__type_conflict(self):
        self.assertEqual(recursive_update({'a': [1]}, {'a': 'text'}), {'a': 'text'})
        self.assertEqual(recursive_update({'a': 'text'}, {'a': {'b': 1}}), {'a': {'b': 1}})


    def test_to_bool(self):
        for value in (True, 1, 'true', 'True', 'YES', '1'):
            self.assertTrue(to_bool(value))
        for value in (False, 0, 'false', 'no', '0', ''):
            self.assertFalse(to_bool(value))

        self.assertRaises(ValueError, to_bool, 'maybe')
        self.assertRaises(ValueError, to_bool, None)


    def test_union_find(self):
        uf = UnionFind(['a', 'b', 'c', 'd'])
        uf.union('a', 'c')
        uf.union('d', 'c')
        uf.union(('new', 1), 'b')

        self.assertEqual(uf.find('a'), uf.find('d'))
        self.assertNotEqual(uf.find('a'), uf.find('b'))
        self.assertEqual(uf.groups(), [['a', 'c', 'd'], ['b', ('new', 1)]])


    def test_rotate_to_front(self):
        self.assertEqual(rotate_to_front([1, 2, 3], 1), [2, 3, 1])
        self.assertEqual(rotate_to_front((1, 2, 3), -1), [3, 1, 2])
        self.assertEqual(rotate_to_front([], 3), [])


if __name__ == '__main__':
    unittest.main()
