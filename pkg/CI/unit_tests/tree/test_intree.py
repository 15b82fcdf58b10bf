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
Test the orientation of spanning trees.
"""
import unittest
from collections import deque

import numpy as np

from znsdc.mst.spanning_tree import SpanningTree
from znsdc.testing.oracles import random_spanning_tree
from znsdc.tree.intree import orient
from znsdc.utils.exceptions import InputError


def bfs_depths(tree: SpanningTree, root: int) -> np.ndarray:
    """
    Independent breadth-first depths of an undirected tree.
    """
    neighbours = {node: [] for node in range(tree.n_nodes)}
    for edge in tree.edges:
        neighbours[edge.u].append(edge.v)
        neighbours[edge.v].append(edge.u)
    depths = np.full(tree.n_nodes, -1)
    depths[root] = 0
    queue = deque([root])
    while queue:
        node = queue.popleft()
        for other in neighbours[node]:
            if depths[other] == -1:
                depths[other] = depths[node] + 1
                queue.append(other)
    return depths


class TestOrient(unittest.TestCase):
    """
    A test class for the orient function.
    """

    def test_single_edge(self):
        """
        Test orienting a single edge at node 0.

        Returns
        -------
        parent = [0, 0].
        """
        intree = orient(SpanningTree.from_tuples([(0, 1, 2.0)]), 0)
        np.testing.assert_array_equal(intree.parent, [0, 0])
        np.testing.assert_array_equal(intree.parent_len, [0.0, 2.0])

    def test_path_rooted_in_centre(self):
        """
        Test the path 0-1-2 rooted at 1.

        Returns
        -------
        Both ends point to the centre.
        """
        tree = SpanningTree.from_tuples([(0, 1, 1.0), (1, 2, 1.0)])
        intree = orient(tree, 1)
        np.testing.assert_array_equal(intree.parent, [1, 1, 1])
        self.assertEqual(intree.children[1], (0, 2))
        self.assertEqual(intree.root, 1)

    def test_random_tree(self):
        """
        Test parent chains of a random tree against an independent BFS.

        Returns
        -------
        Every chain reaches the root after exactly depth steps.
        """
        rng = np.random.default_rng(4)
        tree = random_spanning_tree(50, rng)
        root = 17
        intree = orient(tree, root)
        expected = bfs_depths(tree, root)
        for node in range(50):
            steps, current = 0, node
            while current != root:
                current = int(intree.parent[current])
                steps += 1
                self.assertLessEqual(steps, 49)
            self.assertEqual(steps, expected[node])
        np.testing.assert_array_equal(intree.depth, expected)
        self.assertEqual(intree.edge_set(), tree.edge_set())

    def test_subtree_intervals(self):
        """
        Test the preorder intervals against parent chains.

        Returns
        -------
        in_subtree(j, i) holds exactly when i is on the chain of j.
        """
        rng = np.random.default_rng(9)
        tree = random_spanning_tree(30, rng)
        intree = orient(tree, 0)
        for node in range(30):
            ancestors = {node}
            current = node
            while current != 0:
                current = int(intree.parent[current])
                ancestors.add(current)
            for other in range(30):
                self.assertEqual(intree.in_subtree(node, other), other in ancestors)

    def test_invalid_root(self):
        """
        Test an out of range root.

        Returns
        -------
        InputError.
        """
        tree = SpanningTree.from_tuples([(0, 1, 1.0)])
        with self.assertRaises(InputError):
            orient(tree, 2)
        with self.assertRaises(InputError):
            orient(tree, -1)
