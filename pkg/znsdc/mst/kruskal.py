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
Kruskal construction of the minimal spanning tree, kept as a cross-check.
"""
import logging

import numpy as np

from znsdc.data.dataset import Dataset, Metric
from znsdc.data.distance import distance_row
from znsdc.mst.spanning_tree import Edge, SpanningTree
from znsdc.mst.union_find import UnionFind

logger = logging.getLogger(__name__)


def build_mst_kruskal(dataset: Dataset, metric: Metric = None) -> SpanningTree:
    """
    Build the exact minimal spanning tree with Kruskal's algorithm.

    All n (n - 1) / 2 edges of the complete graph are materialised and sorted by
    (length, min index, max index), which needs O(n^2) memory. Use it to cross-check
    Prim on small and medium datasets.

    Parameters
    ----------
    dataset : Dataset
            Validated dataset with n >= 2.
    metric : Metric (default = None)
            Defaults to the metric of the dataset's kind.

    Returns
    -------
    tree : SpanningTree
            Edges in ascending (length, pair) order.
    """
    n_points = dataset.n_points
    lo, hi = np.triu_indices(n_points, k=1)
    lengths = np.empty(lo.shape[0], dtype=np.float64)
    offset = 0
    for i in range(n_points - 1):
        count = n_points - 1 - i
        lengths[offset : offset + count] = distance_row(dataset, i, metric)[i + 1 :]
        offset += count

    order = np.lexsort((hi, lo, lengths))
    components = UnionFind(n_points)
    edges = []
    for position in order:
        u, v = int(lo[position]), int(hi[position])
        if components.union(u, v):
            edges.append(Edge(u, v, lengths[position]))
            if len(edges) == n_points - 1:
                break

    tree = SpanningTree(edges=tuple(edges), n_nodes=n_points)
    logger.debug(
        "Kruskal MST over %d points, total weight %.6g", n_points, tree.total_weight
    )
    return tree
