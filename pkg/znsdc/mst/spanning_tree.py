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
Edges and spanning trees.
"""
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from znsdc.mst.union_find import UnionFind
from znsdc.utils.exceptions import InputError


@dataclass(frozen=True)
class Edge:
    """
    Undirected weighted edge between two points.

    The endpoints are stored with u < v.

    Attributes
    ----------
    u : int
            Smaller endpoint index.
    v : int
            Larger endpoint index.
    length : float
            Metric distance between the endpoints.
    """

    u: int
    v: int
    length: float

    def __post_init__(self):
        u, v = int(self.u), int(self.v)
        if u == v:
            raise InputError(f"An edge needs two distinct endpoints, got ({u}, {v}).")
        if not self.length >= 0.0:
            raise InputError(f"Edge length must be non-negative, got {self.length}.")
        object.__setattr__(self, "u", min(u, v))
        object.__setattr__(self, "v", max(u, v))
        object.__setattr__(self, "length", float(self.length))

    @property
    def pair(self) -> Tuple[int, int]:
        """
        (min index, max index) of the endpoints.
        """
        return self.u, self.v

    def ascending_key(self) -> Tuple[float, int, int]:
        """
        Sort key of the tie-break rule: shorter first, then smaller index pair.
        """
        return self.length, self.u, self.v

    def descending_key(self) -> Tuple[float, int, int]:
        """
        Sort key for exploring edges longest first; equal lengths keep the
        ascending index pair order.
        """
        return -self.length, self.u, self.v


@dataclass(frozen=True)
class SpanningTree:
    """
    Spanning tree over n points given by its n - 1 edges.

    Attributes
    ----------
    edges : tuple of Edge
            Tree edges in the order the builder produced them.
    n_nodes : int
            Number of points spanned.
    """

    edges: Tuple[Edge, ...]
    n_nodes: int

    def __post_init__(self):
        edges = tuple(self.edges)
        n_nodes = int(self.n_nodes)
        if n_nodes < 2:
            raise InputError(f"A spanning tree needs at least 2 nodes, got {n_nodes}.")
        if len(edges) != n_nodes - 1:
            raise InputError(
                f"A spanning tree over {n_nodes} nodes has {n_nodes - 1} edges, "
                f"got {len(edges)}."
            )
        components = UnionFind(n_nodes)
        for edge in edges:
            if edge.v >= n_nodes:
                raise InputError(f"Edge {edge.pair} references a missing node.")
            if not components.union(edge.u, edge.v):
                raise InputError(f"Edge {edge.pair} closes a cycle.")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "n_nodes", n_nodes)

    @classmethod
    def from_tuples(
        cls, triples: Iterable[Sequence], n_nodes: int = None
    ) -> "SpanningTree":
        """
        Build a tree from (u, v, length) triples.
        """
        edges = tuple(Edge(int(u), int(v), float(length)) for u, v, length in triples)
        if n_nodes is None:
            n_nodes = len(edges) + 1
        return cls(edges=edges, n_nodes=n_nodes)

    @property
    def total_weight(self) -> float:
        """
        Exactly rounded sum of the edge lengths.
        """
        return total_weight(self)

    def sorted_descending(self) -> Tuple[Edge, ...]:
        """
        Edges longest first, ties by ascending index pair.
        """
        return tuple(sorted(self.edges, key=Edge.descending_key))

    def edge_set(self) -> frozenset:
        """
        Set of endpoint pairs, independent of edge order.
        """
        return frozenset(edge.pair for edge in self.edges)

    def __len__(self):
        return len(self.edges)


def total_weight(tree: SpanningTree) -> float:
    """
    Sum of the edge lengths of a tree.

    math.fsum makes the result independent of the edge order, so trees with the
    same edges always report the same weight.
    """
    return math.fsum(edge.length for edge in tree.edges)
