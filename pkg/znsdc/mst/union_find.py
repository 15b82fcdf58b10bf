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
Disjoint-set forest used by Kruskal's algorithm and the tree checks.
"""
import numpy as np


class UnionFind:
    """
    Union-find over the integers 0..n-1 with union by rank and path compression.

    Attributes
    ----------
    n_components : int
            Number of disjoint sets currently held.
    """

    def __init__(self, n_elements: int):
        """
        Constructor for the union-find structure.

        Parameters
        ----------
        n_elements : int
                Number of elements, each starting in its own set.
        """
        self._leader = np.arange(n_elements, dtype=np.int64)
        self._rank = np.zeros(n_elements, dtype=np.int64)
        self.n_components = int(n_elements)

    def __repr__(self):
        return f"UnionFind: contains {self.n_components} components."

    def find(self, element: int) -> int:
        """
        Leader of the set that contains element.
        """
        path = []
        leader = int(element)
        while self._leader[leader] != leader:
            path.append(leader)
            leader = int(self._leader[leader])
        for node in path:
            self._leader[node] = leader
        return leader

    def union(self, a: int, b: int) -> bool:
        """
        Merge the sets of a and b.

        Returns
        -------
        merged : bool
                False if a and b were already in the same set.
        """
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self._rank[root_a] < self._rank[root_b]:
            root_a, root_b = root_b, root_a
        self._leader[root_b] = root_a
        if self._rank[root_a] == self._rank[root_b]:
            self._rank[root_a] += 1
        self.n_components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        """
        Whether a and b are in the same set.
        """
        return self.find(a) == self.find(b)
