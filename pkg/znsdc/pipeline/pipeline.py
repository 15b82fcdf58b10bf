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
End-to-end SDC: spanning tree, in-tree, cutting and root assignment.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional

import numpy as np

from znsdc.config import DEFAULT_MST_ALGORITHM, DEFAULT_ROOT
from znsdc.cutting.divisive_cutter import CutLog, divisive_cut
from znsdc.data.dataset import Dataset, LabelSet, Metric, check_metric, validate
from znsdc.mst import build_mst
from znsdc.mst.spanning_tree import SpanningTree
from znsdc.tree.forest import Forest
from znsdc.tree.intree import InTree, orient
from znsdc.utils.exceptions import InputError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedTree:
    """
    Label independent part of SDC: the spanning tree and its orientation.

    Attributes
    ----------
    dataset : Dataset
            The clustered points.
    metric : Metric
            Metric the tree was built with.
    tree : SpanningTree
            Minimal spanning tree.
    intree : InTree
            Orientation of tree.
    timing : dict
            Wall times in seconds of the "mst" and "orient" steps.
    """

    dataset: Dataset
    metric: Metric
    tree: SpanningTree
    intree: InTree
    timing: Dict[str, float]


@dataclass
class ClusterResult:
    """
    Outcome of one SDC run.

    Attributes
    ----------
    assignment : np.ndarray shape=(n,)
            Cluster id of every point.
    cluster_category : dict
            cluster id -> category id.
    n_clusters : int
            Number of clusters after merging, equal to the number of categories.
    n_subtrees : int
            Number of sub-trees before merging.
    cut_log : CutLog
            Explored edges of the cut phase.
    timing : dict
            Wall times in seconds of the "mst", "orient", "cut" and "assign" steps.
    """

    assignment: np.ndarray
    cluster_category: Dict[int, str]
    n_clusters: int
    n_subtrees: int
    cut_log: CutLog = field(default_factory=CutLog)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def categories(self) -> np.ndarray:
        """
        Category id assigned to every point.
        """
        lookup = np.array(
            [self.cluster_category[c] for c in range(self.n_clusters)], dtype=object
        )
        return lookup[self.assignment].astype(str)


class Merge(NamedTuple):
    """
    Result of merging sub-trees by category.
    """

    assignment: np.ndarray
    cluster_category: Dict[int, str]
    n_subtrees: int


def merge_by_category(forest: Forest, labels: LabelSet) -> Merge:
    """
    Give sub-trees with the same category one cluster id.

    Cluster ids follow the order in which categories first appear among the labeled
    points taken by ascending index.

    Parameters
    ----------
    forest : Forest
            Forest after cutting; every component labeled and pure.
    labels : LabelSet
            Supervision used for cutting.

    Returns
    -------
    merge : Merge
            Per-point cluster ids, cluster -> category map and sub-tree count.
    """
    roots = forest.assign_roots()

    root_category: Dict[int, str] = {}
    cluster_of_category: Dict[str, int] = {}
    for index, category in labels.items():
        root = int(roots[index])
        known = root_category.setdefault(root, category)
        if known != category:
            raise InvariantViolation(
                f"Sub-tree rooted at {root} holds categories {known!r} and "
                f"{category!r}."
            )
        cluster_of_category.setdefault(category, len(cluster_of_category))

    unlabeled = [root for root in forest.roots if root not in root_category]
    if unlabeled:
        raise InvariantViolation(f"Sub-trees without labeled nodes: roots {unlabeled}.")

    cluster_of_root = np.full(forest.n_nodes, -1, dtype=np.int64)
    for root, category in root_category.items():
        cluster_of_root[root] = cluster_of_category[category]
    assignment = cluster_of_root[roots]

    cluster_category = {cluster: c for c, cluster in cluster_of_category.items()}
    return Merge(
        assignment=assignment,
        cluster_category=cluster_category,
        n_subtrees=len(forest.roots),
    )


def prepare(
    dataset: Dataset,
    metric: Optional[Metric] = None,
    root: int = DEFAULT_ROOT,
    algorithm: str = DEFAULT_MST_ALGORITHM,
) -> PreparedTree:
    """
    Run the label independent steps: build the MST and orient it.

    Parameters
    ----------
    dataset : Dataset
            Points to cluster.
    metric : Metric (default = None)
            Defaults to the kind's metric.
    root : int (default = 0)
            Root node of the in-tree. The final partition does not depend on it.
    algorithm : str (default = "prim")
            MST algorithm, "prim" or "kruskal".

    Returns
    -------
    prepared : PreparedTree
    """
    if metric is None:
        metric = Metric.default_for(dataset.kind)
    metric = check_metric(dataset, metric)

    start = time.perf_counter()
    tree = build_mst(dataset, metric, algorithm=algorithm)
    mst_seconds = time.perf_counter() - start

    start = time.perf_counter()
    intree = orient(tree, root)
    orient_seconds = time.perf_counter() - start

    logger.debug(
        "MST (%s) took %.3g s, orientation %.3g s",
        algorithm,
        mst_seconds,
        orient_seconds,
    )
    return PreparedTree(
        dataset=dataset,
        metric=metric,
        tree=tree,
        intree=intree,
        timing={"mst": mst_seconds, "orient": orient_seconds},
    )


def cluster_prepared(prepared: PreparedTree, labels: LabelSet) -> ClusterResult:
    """
    Run the label dependent steps on a prepared tree: cut and assign.

    Parameters
    ----------
    prepared : PreparedTree
            Output of prepare.
    labels : LabelSet
            Supervision.

    Returns
    -------
    result : ClusterResult
    """
    validate(prepared.dataset, labels)

    forest, cut_log = divisive_cut(prepared.intree, prepared.tree, labels)

    start = time.perf_counter()
    merge = merge_by_category(forest, labels)
    assign_seconds = time.perf_counter() - start

    n_clusters = len(merge.cluster_category)
    if n_clusters != labels.n_categories:
        raise InvariantViolation(
            f"{n_clusters} clusters for {labels.n_categories} categories."
        )

    timing = dict(prepared.timing)
    timing["cut"] = cut_log.elapsed
    timing["assign"] = assign_seconds
    return ClusterResult(
        assignment=merge.assignment,
        cluster_category=merge.cluster_category,
        n_clusters=n_clusters,
        n_subtrees=merge.n_subtrees,
        cut_log=cut_log,
        timing=timing,
    )


def run_sdc(
    dataset: Dataset,
    labels: LabelSet,
    metric: Optional[Metric] = None,
    root: int = DEFAULT_ROOT,
    algorithm: str = DEFAULT_MST_ALGORITHM,
) -> ClusterResult:
    """
    Cluster a dataset from a few labeled points.

    Parameters
    ----------
    dataset : Dataset
            Points to cluster.
    labels : LabelSet
            Labeled points.
    metric : Metric (default = None)
            Defaults to euclidean for numeric and mismatch for categorical data.
    root : int (default = 0)
            Root node of the in-tree.
    algorithm : str (default = "prim")
            MST algorithm.

    Returns
    -------
    result : ClusterResult
    """
    if metric is None:
        metric = Metric.default_for(dataset.kind)
    validate(dataset, labels, metric)
    result = cluster_prepared(prepare(dataset, metric, root, algorithm), labels)
    logger.info(
        "Clustered %d points into %d clusters (%d sub-trees)",
        dataset.n_points,
        result.n_clusters,
        result.n_subtrees,
    )
    return result


def _checked_truth(result: ClusterResult, truth, labels: LabelSet) -> np.ndarray:
    truth = np.asarray(truth).astype(str)
    if truth.shape != result.assignment.shape:
        raise InputError(
            f"Ground truth covers {truth.shape[0]} points, "
            f"the result {result.assignment.shape[0]}."
        )
    for index, category in labels.items():
        if truth[index] != category:
            raise InputError(
                f"Point {index} is labeled {category!r} but its truth is "
                f"{truth[index]!r}."
            )
    return truth


def misclassification_count(result: ClusterResult, truth, labels: LabelSet) -> int:
    """
    Number of unlabeled points assigned to the wrong category.
    """
    truth = _checked_truth(result, truth, labels)
    unlabeled = np.ones(truth.shape[0], dtype=bool)
    unlabeled[labels.indices] = False
    return int(np.count_nonzero(result.categories[unlabeled] != truth[unlabeled]))


def error_rate(result: ClusterResult, truth, labels: LabelSet) -> float:
    """
    Falsely assigned unlabeled points divided by all unlabeled points.

    Parameters
    ----------
    result : ClusterResult
            Clustering to evaluate.
    truth : array-like shape=(n,)
            Ground-truth category of every point.
    labels : LabelSet
            Labels used for the run; their truth must match.

    Returns
    -------
    rate : float
            In [0, 1]; 0 when every point is labeled.
    """
    n_unlabeled = result.assignment.shape[0] - len(labels)
    wrong = misclassification_count(result, truth, labels)
    if n_unlabeled == 0:
        return 0.0
    return wrong / n_unlabeled
