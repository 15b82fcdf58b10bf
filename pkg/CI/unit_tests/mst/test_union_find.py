"""
ZnSDC: A Zincwarecode package.
License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html
SPDX-License-Identifier: EPL-2.0
Copyright Contributors to the Zincwarecode Project.
Contact Information
-------------------
email: zincwarecode@gmail.com
github: https://github.com/zincware
web: https://zincwarecode.com/
Citation
--------
If you use this module please cite us with:

Summary
-------
Test the union-find structure.
"""
import unittest

from znsdc.mst.union_find import UnionFind


class TestUnionFind(unittest.TestCase):
    """
    A test class for the UnionFind class.
    """

    def test_union_and_find(self):
        """
        Test merging sets.

        Returns
        -------
        Merged elements share a leader and the component count drops.
        """
        components = UnionFind(6)
        self.assertEqual(components.n_components, 6)
        self.assertTrue(components.union(0, 1))
        self.assertTrue(components.union(2, 3))
        self.assertTrue(components.union(1, 3))
        self.assertFalse(components.union(0, 2))
        self.assertEqual(components.n_components, 3)
        self.assertTrue(components.connected(0, 3))
        self.assertFalse(components.connected(0, 4))
        self.assertEqual(components.find(0), components.find(2))

    def test_long_chain(self):
        """
        Test a long chain of unions.

        Returns
        -------
        All elements end in one set.
        """
        components = UnionFind(500)
        for i in range(499):
            components.union(i, i + 1)
        self.assertEqual(components.n_components, 1)
        leader = components.find(0)
        self.assertTrue(all(components.find(i) == leader for i in range(500)))
