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
Dense Prim construction of the minimal spanning tree.
"""
import logging

import numpy as np

from znsdc.data.dataset import Dataset, Metric
from znsdc.data.distance import distance_row
from znsdc.mst.spanning_tree import Edge, SpanningTree

logger = logging.getLogger(__name__)


def build_mst_prim(dataset: Dataset, metric: Metric = None) -> SpanningTree:
    """
    Build the exact minimal spanning tree with Prim's algorithm.

    The tree grows from point 0. Every step scans one row of distances, so the
    construction needs O(n^2) distance evaluations and O(n) memory; no distance
    matrix is stored.

    Equal lengths are resolved by the (min index, max index) pair of the candidate
    edges, smallest first. With this strict order the result is the unique minimal
    tree and equals the one Kruskal's algorithm finds.

    Parameters
    ----------
    dataset : Dataset
            Validated dataset with n >= 2.
    metric : Metric (default = None)
            Defaults to the metric of the dataset's kind.

    Returns
    -------
    tree : SpanningTree
            Edges in the order they joined the tree.
    """
    n_points = dataset.n_points
    indices = np.arange(n_points, dtype=np.int64)

    in_tree = np.zeros(n_points, dtype=bool)
    best_length = np.full(n_points, np.inf)
    best_source = np.full(n_points, -1, dtype=np.int64)

    current = 0
    in_tree[current] = True
    edges = []
    for _ in range(n_points - 1):
        row = distance_row(dataset, current, metric)

        # Candidate pair (min, max) for the new source against the stored one.
        new_lo = np.minimum(indices, current)
        new_hi = np.maximum(indices, current)
        old_lo = np.minimum(indices, best_source)
        old_hi = np.maximum(indices, best_source)
        tie = row == best_length
        improves = (row < best_length) | (
            tie & ((new_lo < old_lo) | ((new_lo == old_lo) & (new_hi < old_hi)))
        )
        improves &= ~in_tree
        best_length[improves] = row[improves]
        best_source[improves] = current

        outside = np.flatnonzero(~in_tree)
        lengths = best_length[outside]
        tied = outside[lengths == lengths.min()]
        sources = best_source[tied]
        order = np.lexsort((np.maximum(tied, sources), np.minimum(tied, sources)))
        chosen = int(tied[order[0]])

        edges.append(Edge(int(best_source[chosen]), chosen, best_length[chosen]))
        in_tree[chosen] = True
        current = chosen

    tree = SpanningTree(edges=tuple(edges), n_nodes=n_points)
    logger.debug(
        "Prim MST over %d points, total weight %.6g", n_points, tree.total_weight
    )
    return tree
