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
Brute-force oracles for the spanning tree and the divisive rules.
"""
import heapq
import itertools
import math
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from znsdc.data.dataset import LabelSet
from znsdc.mst.spanning_tree import Edge, SpanningTree
from znsdc.mst.union_find import UnionFind

Triple = Tuple[int, int, float]


def prufer_to_edges(sequence: Sequence[int], n_nodes: int) -> List[Tuple[int, int]]:
    """
    Decode a Pruefer sequence of length n - 2 into the edges of a labeled tree.
    """
    degree = [1] * n_nodes
    for node in sequence:
        degree[node] += 1
    leaves = [node for node in range(n_nodes) if degree[node] == 1]
    heapq.heapify(leaves)
    edges = []
    for node in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, node), max(leaf, node)))
        degree[node] -= 1
        if degree[node] == 1:
            heapq.heappush(leaves, node)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def enumerate_spanning_trees(n_nodes: int) -> Iterator[List[Tuple[int, int]]]:
    """
    Every labeled spanning tree of the complete graph on n nodes (n^(n-2) trees).
    """
    if n_nodes == 2:
        yield [(0, 1)]
        return
    for sequence in itertools.product(range(n_nodes), repeat=n_nodes - 2):
        yield prufer_to_edges(sequence, n_nodes)


def brute_force_mst(distances: np.ndarray) -> Tuple[float, List[Tuple[int, int]]]:
    """
    Minimum spanning tree by exhaustive enumeration.

    Parameters
    ----------
    distances : np.ndarray shape=(n, n)
            Symmetric distance matrix.

    Returns
    -------
    (weight, edges) : tuple
            Minimal total weight and the first tree reaching it.
    """
    n_nodes = distances.shape[0]
    best_weight, best_edges = math.inf, None
    for edges in enumerate_spanning_trees(n_nodes):
        weight = math.fsum(float(distances[u, v]) for u, v in edges)
        if weight < best_weight:
            best_weight, best_edges = weight, edges
    return best_weight, best_edges


def tree_from_matrix(distances: np.ndarray, edges) -> SpanningTree:
    """
    SpanningTree over the given (u, v) pairs weighted by a distance matrix.
    """
    return SpanningTree(
        edges=tuple(Edge(u, v, float(distances[u, v])) for u, v in edges),
        n_nodes=distances.shape[0],
    )


def random_spanning_tree(
    n_nodes: int, rng: np.random.Generator, integer_lengths: bool = False
) -> SpanningTree:
    """
    Uniformly random labeled tree with random edge lengths.

    Parameters
    ----------
    n_nodes : int
            Number of nodes, at least 2.
    rng : np.random.Generator
            Source of randomness.
    integer_lengths : bool (default = False)
            Draw lengths from {1, ..., 5} so that ties occur.
    """
    if n_nodes == 2:
        pairs = [(0, 1)]
    else:
        pairs = prufer_to_edges(rng.integers(0, n_nodes, size=n_nodes - 2), n_nodes)
    if integer_lengths:
        lengths = rng.integers(1, 6, size=len(pairs)).astype(float)
    else:
        lengths = rng.uniform(0.0, 1.0, size=len(pairs))
    return SpanningTree(
        edges=tuple(Edge(u, v, l) for (u, v), l in zip(pairs, lengths)),
        n_nodes=n_nodes,
    )


def random_labels(
    n_nodes: int,
    n_categories: int,
    per_category: int,
    rng: np.random.Generator,
) -> LabelSet:
    """
    Label per_category distinct random nodes with each of n_categories categories.
    """
    chosen = rng.choice(n_nodes, size=n_categories * per_category, replace=False)
    return LabelSet.from_pairs(
        (int(node), f"c{position // per_category}")
        for position, node in enumerate(chosen)
    )


def component_partition(n_nodes: int, pairs) -> frozenset:
    """
    Connected components of the graph with the given undirected edges.
    """
    components = UnionFind(n_nodes)
    for u, v in pairs:
        components.union(u, v)
    groups: Dict[int, List[int]] = {}
    for node in range(n_nodes):
        groups.setdefault(components.find(node), []).append(node)
    return frozenset(frozenset(group) for group in groups.values())


def rule_replay_partition(
    n_nodes: int, triples: Sequence[Triple], labels: LabelSet
) -> frozenset:
    """
    Apply the two divisive rules literally on an undirected tree.

    Components are recomputed from scratch before every decision. Edges are taken
    longest first (equal lengths by ascending index pair). An edge is removed when
    its component contains different categories and each of the two resulting
    sub-trees still contains a labeled node. The exploration ends once every
    component is pure.

    Returns
    -------
    partition : frozenset of frozenset
    """
    remaining = {(min(u, v), max(u, v)) for u, v, _ in triples}
    order = sorted(
        ((min(u, v), max(u, v), float(l)) for u, v, l in triples),
        key=lambda t: (-t[2], t[0], t[1]),
    )

    def categories(group):
        return {labels.entries[node] for node in group if node in labels}

    for u, v, _ in order:
        partition = component_partition(n_nodes, remaining)
        if all(len(categories(group)) <= 1 for group in partition):
            break
        component = next(group for group in partition if u in group)
        if len(categories(component)) <= 1:
            continue
        trial = remaining - {(u, v)}
        split = component_partition(n_nodes, trial)
        side_u = next(group for group in split if u in group)
        side_v = next(group for group in split if v in group)
        if categories(side_u) and categories(side_v):
            remaining = trial
    return component_partition(n_nodes, remaining)


def label_partition_is_pure(partition, labels: LabelSet) -> bool:
    """
    Whether every group holds labeled nodes of exactly one category.
    """
    for group in partition:
        found = {labels.entries[node] for node in group if node in labels}
        if len(found) != 1:
            return False
    return True
