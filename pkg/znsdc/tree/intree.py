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
Orientation of a spanning tree into an in-tree.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from znsdc.mst.spanning_tree import SpanningTree
from znsdc.utils.exceptions import InputError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InTree:
    """
    Directed version of a spanning tree in which every node points to its parent.

    Attributes
    ----------
    parent : np.ndarray shape=(n,)
            Parent index of every node, the root points to itself.
    parent_len : np.ndarray shape=(n,)
            Length of the edge to the parent, 0 for the root.
    root : int
            The root node R.
    order : np.ndarray shape=(n,)
            Breadth-first visiting order; parents always come before children.
    depth : np.ndarray shape=(n,)
            Number of parent links between a node and the root.
    children : tuple
            Children of every node in ascending index order.
    entry, exit : np.ndarray shape=(n,)
            Depth-first preorder interval of every node. Node j lies in the
            subtree of i if and only if entry[i] <= entry[j] < exit[i].
    """

    parent: np.ndarray
    parent_len: np.ndarray
    root: int
    order: np.ndarray
    depth: np.ndarray
    children: Tuple[Tuple[int, ...], ...]
    entry: np.ndarray
    exit: np.ndarray

    def __post_init__(self):
        for name in ("parent", "parent_len", "order", "depth", "entry", "exit"):
            getattr(self, name).setflags(write=False)

    @property
    def n_nodes(self) -> int:
        """
        Number of nodes.
        """
        return int(self.parent.shape[0])

    def in_subtree(self, node: int, ancestor: int) -> bool:
        """
        Whether node lies in the subtree rooted at ancestor (inclusive).
        """
        return bool(self.entry[ancestor] <= self.entry[node] < self.exit[ancestor])

    def edge_set(self) -> frozenset:
        """
        Undirected (min, max) pairs of all child -> parent links.
        """
        return frozenset(
            (min(i, int(p)), max(i, int(p)))
            for i, p in enumerate(self.parent)
            if i != p
        )


def orient(tree: SpanningTree, root: int = 0) -> InTree:
    """
    Make every edge of the tree point from child to parent.

    The offspring of the root are identified breadth first: its children, the
    children's children and so on, neighbours in ascending index order.

    Parameters
    ----------
    tree : SpanningTree
            Tree to orient.
    root : int (default = 0)
            Index of the root node R. Any node is valid.

    Returns
    -------
    intree : InTree
    """
    n_nodes = tree.n_nodes
    if isinstance(root, bool) or not 0 <= int(root) < n_nodes:
        raise InputError(f"Root index {root} is out of range for {n_nodes} nodes.")
    root = int(root)

    neighbours: List[List[Tuple[int, float]]] = [[] for _ in range(n_nodes)]
    for edge in tree.edges:
        neighbours[edge.u].append((edge.v, edge.length))
        neighbours[edge.v].append((edge.u, edge.length))
    for adjacent in neighbours:
        adjacent.sort()

    parent = np.full(n_nodes, -1, dtype=np.int64)
    parent_len = np.zeros(n_nodes, dtype=np.float64)
    depth = np.zeros(n_nodes, dtype=np.int64)
    children: List[List[int]] = [[] for _ in range(n_nodes)]
    order = []

    parent[root] = root
    queue = deque([root])
    while queue:
        node = queue.popleft()
        order.append(node)
        for neighbour, length in neighbours[node]:
            if parent[neighbour] != -1:
                continue
            parent[neighbour] = node
            parent_len[neighbour] = length
            depth[neighbour] = depth[node] + 1
            children[node].append(neighbour)
            queue.append(neighbour)

    if len(order) != n_nodes:
        raise InvariantViolation(
            f"Orientation reached {len(order)} of {n_nodes} nodes; not a tree."
        )

    order = np.asarray(order, dtype=np.int64)
    subtree_size = np.ones(n_nodes, dtype=np.int64)
    for node in order[::-1]:
        if node != root:
            subtree_size[parent[node]] += subtree_size[node]

    entry = np.zeros(n_nodes, dtype=np.int64)
    counter = 0
    stack = [root]
    while stack:
        node = stack.pop()
        entry[node] = counter
        counter += 1
        stack.extend(reversed(children[node]))

    logger.debug("Oriented %d nodes at root %d, depth %d", n_nodes, root, depth.max())
    return InTree(
        parent=parent,
        parent_len=parent_len,
        root=root,
        order=order,
        depth=depth,
        children=tuple(tuple(c) for c in children),
        entry=entry,
        exit=entry + subtree_size,
    )
