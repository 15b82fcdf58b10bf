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
Forest of in-trees produced by cutting edges.
"""
from typing import Dict, List, Tuple

import numpy as np

from znsdc.tree.intree import InTree
from znsdc.utils.exceptions import CutError, InputError


class Forest:
    """
    Parent structure of an in-tree after some edges were removed.

    A cut turns the child endpoint of the removed edge into a new self-parented
    root. The InTree the forest starts from is never modified, so one orientation
    can seed any number of forests.

    Attributes
    ----------
    intree : InTree
            The uncut in-tree.
    parent : np.ndarray
            Current parent of every node.
    parent_len : np.ndarray
            Current length of every node's parent edge, 0 for roots.
    """

    def __init__(self, intree: InTree):
        """
        Constructor for the forest.

        Parameters
        ----------
        intree : InTree
                In-tree to start from. Its arrays are copied.
        """
        self.intree = intree
        self.parent = np.array(intree.parent, dtype=np.int64)
        self.parent_len = np.array(intree.parent_len, dtype=np.float64)
        self._roots = {int(intree.root)}
        self._root_cache = np.full(intree.n_nodes, -1, dtype=np.int64)

    @property
    def n_nodes(self) -> int:
        """
        Number of nodes.
        """
        return int(self.parent.shape[0])

    @property
    def roots(self) -> Tuple[int, ...]:
        """
        Current roots in ascending order.
        """
        return tuple(sorted(self._roots))

    @property
    def n_cuts(self) -> int:
        """
        Number of cuts applied so far.
        """
        return len(self._roots) - 1

    def _check_index(self, node: int) -> int:
        node = int(node)
        if not 0 <= node < self.n_nodes:
            raise InputError(f"Node {node} is out of range for {self.n_nodes} nodes.")
        return node

    def is_root(self, node: int) -> bool:
        """
        Whether node is currently a root.
        """
        node = self._check_index(node)
        return bool(self.parent[node] == node)

    def copy(self) -> "Forest":
        """
        Independent copy sharing only the immutable in-tree.
        """
        clone = Forest(self.intree)
        clone.parent[:] = self.parent
        clone.parent_len[:] = self.parent_len
        clone._roots = set(self._roots)
        return clone

    def cut(self, child: int) -> "Forest":
        """
        Remove the edge from child to its parent.

        Parameters
        ----------
        child : int
                Child endpoint of the removed edge; becomes a root.

        Returns
        -------
        forest : Forest
                This forest, for chaining.
        """
        child = self._check_index(child)
        if self.parent[child] == child:
            raise CutError(f"Node {child} is already a root and cannot be cut.")
        self.parent[child] = child
        self.parent_len[child] = 0.0
        self._roots.add(child)
        self._root_cache.fill(-1)
        return self

    def find_root(self, node: int, compress: bool = True) -> int:
        """
        Follow parent links from node to its root.

        Parameters
        ----------
        node : int
                Start node.
        compress : bool (default = True)
                Memoize the root of every node on the walked path. The parent links
                themselves are left untouched, so later cuts stay valid.

        Returns
        -------
        root : int
        """
        node = self._check_index(node)
        path = []
        current = node
        while self.parent[current] != current:
            cached = self._root_cache[current]
            if compress and cached != -1:
                current = int(cached)
                break
            path.append(current)
            current = int(self.parent[current])
        if compress:
            self._root_cache[path] = current
        return current

    def enclosing_root(self, node: int) -> int:
        """
        Root of node from the preorder intervals of the in-tree.

        The root of a node is the deepest current root whose original subtree
        contains it. Costs O(number of roots) instead of O(depth).
        """
        node = self._check_index(node)
        position = self.intree.entry[node]
        best, best_entry = self.intree.root, -1
        for root in self._roots:
            start = self.intree.entry[root]
            if start <= position < self.intree.exit[root] and start > best_entry:
                best, best_entry = root, start
        return int(best)

    def assign_roots(self) -> np.ndarray:
        """
        Root of every node at once.

        Every node repeatedly jumps to its parent's target until nothing moves,
        which takes O(log depth) vectorised rounds.

        Returns
        -------
        roots : np.ndarray shape=(n,)
        """
        target = self.parent.copy()
        while True:
            jumped = target[target]
            if np.array_equal(jumped, target):
                return target
            target = jumped

    def children_of(self, node: int) -> List[int]:
        """
        Current children of node.
        """
        node = self._check_index(node)
        return [c for c in self.intree.children[node] if self.parent[c] == node]

    def components(self) -> Dict[int, List[int]]:
        """
        Members of every component, keyed by root.
        """
        roots = self.assign_roots()
        members: Dict[int, List[int]] = {root: [] for root in self.roots}
        for node, root in enumerate(roots):
            members[int(root)].append(node)
        return members

    def partition(self) -> frozenset:
        """
        Components as a set of frozensets, independent of which node is root.
        """
        return frozenset(frozenset(m) for m in self.components().values())


def cut(forest: Forest, child: int) -> Forest:
    """
    Cut the parent edge of child in forest.
    """
    return forest.cut(child)


def find_root(forest: Forest, node: int) -> int:
    """
    Root reached from node by following parent links.
    """
    return forest.find_root(node)
