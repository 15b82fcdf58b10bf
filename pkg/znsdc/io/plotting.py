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
SVG scatter plots of 2D clustering results.
"""
from pathlib import Path
from typing import Union

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from znsdc.config import PALETTE
from znsdc.data.dataset import Dataset, DataKind, LabelSet
from znsdc.pipeline.pipeline import ClusterResult
from znsdc.utils.exceptions import InputError, UnsupportedPlotError


def emit_scatter_svg(
    dataset: Dataset,
    result: ClusterResult,
    labels: LabelSet,
    path: Union[str, Path],
    title: str = None,
) -> Path:
    """
    Draw a 2D clustering as an SVG scatter plot.

    Every cluster gets one palette colour; labeled points are drawn as triangles,
    the others as circles. The output bytes only depend on the inputs.

    Parameters
    ----------
    dataset : Dataset
            Numeric points with dim = 2.
    result : ClusterResult
            Clustering of the points.
    labels : LabelSet
            Labels of the run.
    path : str or Path
            Output file.
    title : str (default = None)
            Optional axes title.

    Returns
    -------
    path : Path
    """
    if dataset.kind is not DataKind.NUMERIC or dataset.dim != 2:
        raise UnsupportedPlotError(
            f"Scatter plots need 2D numeric data, got {dataset.dim}D "
            f"{dataset.kind.value} data."
        )
    if path is None or str(path).strip() == "":
        raise InputError("An output path is required.")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    labeled = np.zeros(dataset.n_points, dtype=bool)
    labeled[labels.indices] = True
    points = dataset.points

    with matplotlib.rc_context({"svg.hashsalt": "znsdc", "svg.fonttype": "none"}):
        figure = Figure(figsize=(6.0, 6.0))
        axes = figure.add_subplot(1, 1, 1)
        for cluster in range(result.n_clusters):
            colour = PALETTE[cluster % len(PALETTE)]
            members = result.assignment == cluster
            plain = members & ~labeled
            marked = members & labeled
            axes.scatter(
                points[plain, 0],
                points[plain, 1],
                c=colour,
                marker="o",
                s=6,
                linewidths=0,
                label=result.cluster_category[cluster],
            )
            axes.scatter(
                points[marked, 0],
                points[marked, 1],
                c=colour,
                marker="^",
                s=80,
                edgecolors="black",
                linewidths=0.8,
            )
        axes.set_aspect("equal", adjustable="datalim")
        axes.legend(loc="best", fontsize="small", markerscale=2)
        if title:
            axes.set_title(title)
        figure.savefig(path, format="svg", metadata={"Date": None})
    return path
