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
Generated 2D datasets with known cluster structure.
"""
from dataclasses import dataclass

import numpy as np

from znsdc.data.dataset import Dataset, LabelSet

NOISE = "noise"


@dataclass(frozen=True)
class SyntheticData:
    """
    A generated dataset with its ground truth.

    Attributes
    ----------
    dataset : Dataset
            The 2D points.
    truth : np.ndarray shape=(n,)
            Generating cluster of every point, "noise" for background points.
    core : np.ndarray shape=(n,)
            True for points well inside their generating cluster.
    labels : LabelSet
            Suggested supervision, drawn from the cores.
    """

    dataset: Dataset
    truth: np.ndarray
    core: np.ndarray
    labels: LabelSet


def _pick_labels(truth, core, per_cluster, rng) -> LabelSet:
    chosen = []
    for name, count in per_cluster.items():
        candidates = np.flatnonzero((truth == name) & core)
        chosen.extend(rng.choice(candidates, size=count, replace=False).tolist())
    return LabelSet.from_truth(truth, sorted(chosen))


def make_three_groups(
    n_per_group: int = 60, spread: float = 0.8, seed: int = 0
) -> SyntheticData:
    """
    Three well separated Gaussian groups with one label each.

    Parameters
    ----------
    n_per_group : int (default = 60)
            Points per group.
    spread : float (default = 0.8)
            Standard deviation of every group.
    seed : int (default = 0)
            Random seed.

    Returns
    -------
    data : SyntheticData
    """
    rng = np.random.default_rng(seed)
    centres = np.array([[0.0, 0.0], [10.0, 0.0], [5.0, 9.0]])
    names = np.array(["A", "B", "C"])
    points = np.concatenate(
        [rng.normal(centre, spread, size=(n_per_group, 2)) for centre in centres]
    )
    truth = np.repeat(names, n_per_group)
    members = np.repeat(np.arange(3), n_per_group)
    offsets = np.linalg.norm(points - centres[members], axis=1)
    core = offsets <= 2.0 * spread
    labels = _pick_labels(truth, core, {name: 1 for name in names}, rng)
    return SyntheticData(
        dataset=Dataset.numeric(points), truth=truth, core=core, labels=labels
    )


def _blob(rng, centre, sigma, size):
    points = rng.normal(centre, sigma, size=(size, 2))
    core = np.linalg.norm(points - centre, axis=1) <= 1.5 * sigma
    return points, core


def _arc(rng, centre, radius, start, stop, thickness, size):
    angles = rng.uniform(start, stop, size=size)
    offsets = rng.normal(0.0, thickness, size=size)
    radii = radius + offsets
    points = np.column_stack(
        (centre[0] + radii * np.cos(angles), centre[1] + radii * np.sin(angles))
    )
    return points, np.abs(offsets) <= 1.5 * thickness


def make_blobs_and_arcs(
    seed: int = 0,
    blob_size: int = 520,
    arc_size: int = 650,
    noise_fraction: float = 0.05,
) -> SyntheticData:
    """
    Clusters of different size, shape and density on a noisy background.

    Three Gaussian blobs of different spread and two interleaved half-circle
    arcs, plus uniform background noise over the whole canvas. One or two labels
    are drawn from the core of every cluster; noise points are never labeled.

    Parameters
    ----------
    seed : int (default = 0)
            Random seed.
    blob_size : int (default = 520)
            Points per blob.
    arc_size : int (default = 650)
            Points per arc.
    noise_fraction : float (default = 0.05)
            Share of noise points in the whole dataset.

    Returns
    -------
    data : SyntheticData
    """
    rng = np.random.default_rng(seed)
    parts = [
        ("blob-1",) + _blob(rng, np.array([15.0, 15.0]), 2.0, blob_size),
        ("blob-2",) + _blob(rng, np.array([65.0, 15.0]), 2.5, blob_size),
        ("blob-3",) + _blob(rng, np.array([15.0, 65.0]), 1.5, blob_size),
        ("arc-1",) + _arc(rng, (50.0, 55.0), 12.0, 0.0, np.pi, 0.6, arc_size),
        ("arc-2",) + _arc(rng, (62.0, 50.0), 12.0, np.pi, 2 * np.pi, 0.6, arc_size),
    ]
    n_clustered = 3 * blob_size + 2 * arc_size
    n_noise = int(round(noise_fraction * n_clustered / (1.0 - noise_fraction)))
    noise = rng.uniform(0.0, 80.0, size=(n_noise, 2))

    points = np.concatenate([p for _, p, _ in parts] + [noise])
    truth = np.concatenate(
        [np.full(len(p), name) for name, p, _ in parts] + [np.full(n_noise, NOISE)]
    )
    core = np.concatenate([c for _, _, c in parts] + [np.zeros(n_noise, dtype=bool)])

    per_cluster = {name: int(rng.integers(1, 3)) for name, _, _ in parts}
    labels = _pick_labels(truth, core, per_cluster, rng)
    return SyntheticData(
        dataset=Dataset.numeric(points), truth=truth, core=core, labels=labels
    )
