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

__all__ = ['recursive_update', 'first_or_none', 'to_bool', 'UnionFind', 'rotate_to_front']
__author__ = "khrot contributors"

import json

from collections import abc
from copy import deepcopy
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Sequence


def first_or_none(items: Iterable, condition: Callable = None):
    """
    Return first element in iterable to match condition or None
    """

    if not condition:
        def condition(*args, **kwargs):
            return True

    for item in items:
        if condition(item):
            return item

    return None


def recursive_update(d: Dict, u: Mapping) -> Dict:
    """
    Recursively updates the dictionary `d` with another one `u`.
    Values of `u` overwrite in case of type conflict.

    List, set and tuple values of `d` and `u` are merged, preserving only unique values in the order of appearance.
    Returned as List.
    """

    new = deepcopy(d)

    for k, v in u.items():
        if isinstance(v, abc.Mapping) and isinstance(d.get(k), (abc.Mapping, type(None))):
            new[k] = recursive_update(d.get(k) or {}, v)

        elif isinstance(v, (set, list, tuple)) and isinstance(d.get(k), (set, list, tuple)):
            merged, seen = [], set()
            for x in list(d[k]) + list(v):
                key = json.dumps(x, sort_keys=True, default=str)
                if key not in seen:
                    seen.add(key)
                    merged.append(x)
            new[k] = merged

        else:
            new[k] = v

    return new


def to_bool(val) -> bool:
    if isinstance(val, (bool, int, float)):
        return bool(val)
    if isinstance(val, str):
        if val.lower() in ['true', '1', 'yes']:
            return True
        if val.lower() in ['false', '0', 'no', '']:
            return False
    raise ValueError(f"Can't convert unexpected value to bool: {val}, type: {type(val)}")


class UnionFind:
    """
    Disjoint sets over arbitrary hashable nodes with path compression and union by size.
    Nodes are registered lazily on first use.
    """

    def __init__(self, nodes: Iterable[Hashable] = ()):
        self.parent = {}
        self.size = {}
        for node in nodes:
            self.add(node)


    def add(self, node: Hashable):
        if node not in self.parent:
            self.parent[node] = node
            self.size[node] = 1


    def find(self, node: Hashable) -> Hashable:
        self.add(node)
        root = node
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[node] != root:
            self.parent[node], node = root, self.parent[node]
        return root


    def union(self, a: Hashable, b: Hashable) -> Hashable:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return root_a
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        return root_a


    def groups(self) -> List[List[Hashable]]:
        """
        Classes in order of first registration of their members, members in registration order as well.
        """

        result = {}
        for node in self.parent:
            result.setdefault(self.find(node), []).append(node)
        return list(result.values())


def rotate_to_front(items: Sequence, index: int) -> List:
    """ Cyclic rotation so that `items[index]` comes first. """

    if not items:
        return []
    index %= len(items)
    return list(items[index:]) + list(items[:index])
