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
Label budget sweeps: repeated SDC runs on random label draws.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from rich.progress import track

from znsdc.config import DEFAULT_MST_ALGORITHM, DEFAULT_ROOT
from znsdc.data.dataset import Dataset, LabelSet, Metric
from znsdc.pipeline.pipeline import PreparedTree, cluster_prepared, error_rate, prepare
from znsdc.utils.exceptions import InputError

logger = logging.getLogger(__name__)

REPORT_COLUMNS = (
    "budget",
    "n_labeled",
    "trials",
    "mean_error",
    "stderr_error",
    "mean_subtrees",
    "mean_clusters",
    "mean_cut_ms",
)
TIMING_COLUMNS = ("mean_cut_ms",)


@dataclass(frozen=True)
class SweepLevel:
    """
    Statistics of one label budget.

    Attributes
    ----------
    budget : int
            Labels per category.
    n_labeled : int
            Labeled points per trial.
    trials : int
            Number of random label draws.
    mean_error : float
            Mean error rate over the trials.
    stderr_error : float
            Sample standard deviation of the error rate divided by sqrt(trials).
    mean_subtrees : float
            Mean number of sub-trees before merging.
    mean_clusters : float
            Mean number of clusters after merging.
    mean_cut_ms : float
            Mean wall time of the cut phase in milliseconds.
    """

    budget: int
    n_labeled: int
    trials: int
    mean_error: float
    stderr_error: float
    mean_subtrees: float
    mean_clusters: float
    mean_cut_ms: float


@dataclass
class SweepReport:
    """
    Result of a label budget sweep.

    Attributes
    ----------
    levels : list of SweepLevel
            One entry per budget, in the requested order.
    seed : int
            Seed the label draws were derived from.
    stratified : bool
            Whether labels were drawn per category.
    mst_seconds : float
            One-time MST construction time shared by all trials.
    """

    levels: List[SweepLevel] = field(default_factory=list)
    seed: int = 0
    stratified: bool = True
    mst_seconds: float = float("nan")

    def to_frame(self, include_timings: bool = True) -> pd.DataFrame:
        """
        Report as a table with one row per budget.
        """
        frame = pd.DataFrame(
            [[getattr(level, c) for c in REPORT_COLUMNS] for level in self.levels],
            columns=list(REPORT_COLUMNS),
        )
        if not include_timings:
            frame = frame.drop(columns=list(TIMING_COLUMNS))
        return frame

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, **kwargs) -> "SweepReport":
        """
        Rebuild a report from to_frame output.
        """
        levels = []
        for row in frame.itertuples(index=False):
            values = row._asdict()
            levels.append(
                SweepLevel(
                    budget=int(values["budget"]),
                    n_labeled=int(values["n_labeled"]),
                    trials=int(values["trials"]),
                    mean_error=float(values["mean_error"]),
                    stderr_error=float(values["stderr_error"]),
                    mean_subtrees=float(values["mean_subtrees"]),
                    mean_clusters=float(values["mean_clusters"]),
                    mean_cut_ms=float(values.get("mean_cut_ms", float("nan"))),
                )
            )
        return cls(levels=levels, **kwargs)


def draw_labels(
    truth: np.ndarray,
    budget: int,
    rng: np.random.Generator,
    stratified: bool = True,
) -> LabelSet:
    """
    Draw a random label set from the ground truth.

    Parameters
    ----------
    truth : np.ndarray shape=(n,)
            Category of every point.
    budget : int
            Labels per category.
    rng : np.random.Generator
            Source of randomness.
    stratified : bool (default = True)
            Draw exactly budget points from every category. Otherwise draw
            budget * n_categories points uniformly from the whole dataset.

    Returns
    -------
    labels : LabelSet
    """
    truth = np.asarray(truth).astype(str)
    categories = np.unique(truth)
    if stratified:
        chosen = []
        for category in categories:
            members = np.flatnonzero(truth == category)
            if budget > members.size:
                raise InputError(
                    f"Budget {budget} exceeds the {members.size} points of "
                    f"category {category!r}."
                )
            chosen.append(rng.choice(members, size=budget, replace=False))
        indices = np.sort(np.concatenate(chosen))
    else:
        total = budget * categories.size
        if total > truth.size:
            raise InputError(
                f"Budget {budget} x {categories.size} categories exceeds "
                f"{truth.size} points."
            )
        indices = np.sort(rng.choice(truth.size, size=total, replace=False))
    return LabelSet.from_truth(truth, indices)


def _trial_rng(seed: int, level: int, trial: int) -> np.random.Generator:
    """
    Independent stream per (level, trial); the same for any execution order.
    """
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(level, trial))
    )


def _run_trial(
    prepared: PreparedTree,
    truth: np.ndarray,
    budget: int,
    rng: np.random.Generator,
    stratified: bool,
) -> Tuple[float, int, int, float, int]:
    labels = draw_labels(truth, budget, rng, stratified=stratified)
    result = cluster_prepared(prepared, labels)
    return (
        error_rate(result, truth, labels),
        result.n_subtrees,
        result.n_clusters,
        result.timing["cut"],
        len(labels),
    )


def _standard_error(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1) / math.sqrt(values.size))


def sweep(
    dataset: Dataset,
    truth: Sequence,
    budgets: Sequence[int],
    trials: int = 20,
    seed: int = 0,
    metric: Optional[Metric] = None,
    stratified: bool = True,
    threads: int = 1,
    root: int = DEFAULT_ROOT,
    algorithm: str = DEFAULT_MST_ALGORITHM,
    prepared: Optional[PreparedTree] = None,
    progress: bool = False,
) -> SweepReport:
    """
    Error rate, sub-tree count and cut time versus the number of labels.

    The spanning tree and its orientation are built once; every trial only draws
    labels, cuts and assigns.

    Parameters
    ----------
    dataset : Dataset
            Points to cluster.
    truth : sequence
            Ground-truth category of every point.
    budgets : sequence of int
            Labels per category for every level.
    trials : int (default = 20)
            Random label draws per level.
    seed : int (default = 0)
            Seed of all label draws; the same seed gives the same report.
    metric : Metric (default = None)
            Defaults to the kind's metric.
    stratified : bool (default = True)
            Draw labels per category.
    threads : int (default = 1)
            Trials run in parallel threads; results do not depend on it.
    root : int (default = 0)
            Root node of the in-tree.
    algorithm : str (default = "prim")
            MST algorithm.
    prepared : PreparedTree (default = None)
            Reuse an existing spanning tree instead of building one.
    progress : bool (default = False)
            Show a progress bar over the budgets.

    Returns
    -------
    report : SweepReport
    """
    truth = np.asarray(truth).astype(str)
    if truth.shape[0] != dataset.n_points:
        raise InputError(
            f"Ground truth covers {truth.shape[0]} of {dataset.n_points} points."
        )
    if seed < 0:
        raise InputError(f"The seed must be non-negative, got {seed}.")
    if trials < 1:
        raise InputError(f"At least one trial is needed, got {trials}.")
    budgets = [int(b) for b in budgets]
    if not budgets:
        raise InputError("No label budgets given.")
    for budget in budgets:
        if budget < 1:
            raise InputError(f"Label budgets must be at least 1, got {budget}.")

    if prepared is None:
        prepared = prepare(dataset, metric, root=root, algorithm=algorithm)
    parallel = Parallel(n_jobs=threads, prefer="threads")

    levels = []
    for level, budget in enumerate(
        track(budgets, description="Sweeping label budgets", disable=not progress)
    ):
        outcomes = parallel(
            delayed(_run_trial)(
                prepared, truth, budget, _trial_rng(seed, level, trial), stratified
            )
            for trial in range(trials)
        )
        errors, subtrees, clusters, cut_seconds, n_labeled = (
            np.asarray(column) for column in zip(*outcomes)
        )
        levels.append(
            SweepLevel(
                budget=budget,
                n_labeled=int(n_labeled[0]),
                trials=trials,
                mean_error=float(np.mean(errors)),
                stderr_error=_standard_error(errors),
                mean_subtrees=float(np.mean(subtrees)),
                mean_clusters=float(np.mean(clusters)),
                mean_cut_ms=float(np.mean(cut_seconds) * 1e3),
            )
        )
        logger.info(
            "Budget %d: mean error %.4f +- %.4f, %.1f sub-trees",
            budget,
            levels[-1].mean_error,
            levels[-1].stderr_error,
            levels[-1].mean_subtrees,
        )

    return SweepReport(
        levels=levels,
        seed=seed,
        stratified=stratified,
        mst_seconds=prepared.timing["mst"],
    )
