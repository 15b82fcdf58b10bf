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
Test the edge and spanning tree containers.
"""
import unittest

from znsdc.mst.spanning_tree import Edge, SpanningTree, total_weight
from znsdc.utils.exceptions import InputError


class TestEdge(unittest.TestCase):
    """
    A test class for the Edge class.
    """

    def test_normalisation(self):
        """
        Test that endpoints are stored in ascending order.

        Returns
        -------
        (5, 2) becomes (2, 5).
        """
        edge = Edge(5, 2, 1.5)
        self.assertEqual(edge.pair, (2, 5))
        self.assertEqual(edge.length, 1.5)

    def test_invalid_edges(self):
        """
        Test loops, negative and NaN lengths.

        Returns
        -------
        All raise an InputError.
        """
        with self.assertRaises(InputError):
            Edge(1, 1, 0.0)
        with self.assertRaises(InputError):
            Edge(0, 1, -1.0)
        with self.assertRaises(InputError):
            Edge(0, 1, float("nan"))

    def test_descending_order(self):
        """
        Test the exploration order of edges.

        Returns
        -------
        Longest first, equal lengths by ascending index pair.
        """
        edges = [Edge(3, 4, 2.0), Edge(0, 1, 5.0), Edge(1, 2, 2.0), Edge(2, 3, 7.0)]
        ordered = sorted(edges, key=Edge.descending_key)
        self.assertEqual([e.pair for e in ordered], [(2, 3), (0, 1), (1, 2), (3, 4)])


class TestSpanningTree(unittest.TestCase):
    """
    A test class for the SpanningTree class.
    """

    def test_valid_tree(self):
        """
        Test a valid tree and its weight.

        Returns
        -------
        The weight is the sum of the lengths.
        """
        tree = SpanningTree.from_tuples([(0, 1, 1.0), (1, 2, 5.0), (2, 3, 2.0)])
        self.assertEqual(tree.n_nodes, 4)
        self.assertEqual(len(tree), 3)
        self.assertEqual(tree.total_weight, 8.0)
        self.assertEqual(total_weight(tree), 8.0)
        self.assertEqual(tree.edge_set(), {(0, 1), (1, 2), (2, 3)})
        self.assertEqual(tree.sorted_descending()[0].pair, (1, 2))

    def test_invalid_trees(self):
        """
        Test wrong edge counts, cycles and missing nodes.

        Returns
        -------
        All raise an InputError.
        """
        with self.assertRaises(InputError):
            SpanningTree.from_tuples([(0, 1, 1.0)], n_nodes=3)
        with self.assertRaises(InputError):
            SpanningTree.from_tuples([(0, 1, 1.0), (1, 0, 1.0)], n_nodes=3)
        with self.assertRaises(InputError):
            SpanningTree.from_tuples([(0, 1, 1.0), (1, 3, 1.0)], n_nodes=3)
