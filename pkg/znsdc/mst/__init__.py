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
Minimal spanning tree construction.
"""
from znsdc.data.dataset import Dataset, Metric
from znsdc.mst.kruskal import build_mst_kruskal
from znsdc.mst.prim import build_mst_prim
from znsdc.mst.spanning_tree import Edge, SpanningTree, total_weight
from znsdc.mst.union_find import UnionFind
from znsdc.utils.exceptions import InputError

MST_ALGORITHMS = {"prim": build_mst_prim, "kruskal": build_mst_kruskal}


def build_mst(dataset: Dataset, metric: Metric = None, algorithm: str = "prim"):
    """
    Build the minimal spanning tree with the named algorithm.

    Parameters
    ----------
    dataset : Dataset
            Points to connect.
    metric : Metric (default = None)
            Edge weights, defaults to the kind's metric.
    algorithm : str (default = "prim")
            "prim" or "kruskal".

    Returns
    -------
    tree : SpanningTree
    """
    try:
        builder = MST_ALGORITHMS[algorithm]
    except KeyError:
        raise InputError(
            f"Unknown MST algorithm '{algorithm}', "
            f"choose from {sorted(MST_ALGORITHMS)}."
        )
    return builder(dataset, metric)


__all__ = [
    "Edge",
    "SpanningTree",
    "UnionFind",
    "build_mst",
    "build_mst_prim",
    "build_mst_kruskal",
    "total_weight",
    "MST_ALGORITHMS",
]
