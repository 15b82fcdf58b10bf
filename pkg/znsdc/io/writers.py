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
Writing and reading assignments, sweep reports, cut logs and labels.
"""
import io
from pathlib import Path
from typing import Dict, NamedTuple, Union

import numpy as np
import pandas as pd

from znsdc.cutting.divisive_cutter import CutLog
from znsdc.data.dataset import Dataset, LabelSet
from znsdc.pipeline.pipeline import ClusterResult
from znsdc.pipeline.sweep import SweepReport
from znsdc.utils.exceptions import InputError

PathLike = Union[str, Path]


def _target(path: PathLike) -> Path:
    if path is None or str(path).strip() == "":
        raise InputError("An output path is required.")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


class ParsedAssignment(NamedTuple):
    """
    Content of an assignment file.
    """

    assignment: np.ndarray
    categories: np.ndarray
    cluster_category: Dict[int, str]
    footer: Dict[str, str]


def write_assignment(
    result: ClusterResult, path: PathLike, include_timings: bool = True
) -> Path:
    """
    Write one line "index,cluster,category" per point and a "# key=value" footer.

    Parameters
    ----------
    result : ClusterResult
            Clustering to store.
    path : str or Path
            Output file.
    include_timings : bool (default = True)
            Add the per-step wall times to the footer.

    Returns
    -------
    path : Path
    """
    path = _target(path)
    frame = pd.DataFrame(
        {
            "index": np.arange(result.assignment.shape[0]),
            "cluster": result.assignment,
            "category": result.categories,
        }
    )
    footer = {"n_clusters": result.n_clusters, "n_subtrees": result.n_subtrees}
    if include_timings:
        for step, seconds in result.timing.items():
            footer[f"time_{step}_s"] = repr(float(seconds))

    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        frame.to_csv(handle, header=False, index=False, lineterminator="\n")
        for key, value in footer.items():
            handle.write(f"# {key}={value}\n")
    return path


def read_assignment(path: PathLike) -> ParsedAssignment:
    """
    Parse a file written by write_assignment.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"File {path} does not exist.")
    lines = path.read_text(encoding="utf-8").splitlines()
    footer = dict(
        line[2:].split("=", 1) for line in lines if line.startswith("# ")
    )
    body = "\n".join(line for line in lines if not line.startswith("# "))
    frame = pd.read_csv(
        io.StringIO(body),
        header=None,
        names=["index", "cluster", "category"],
        dtype=str,
        keep_default_na=False,
    )
    assignment = frame["cluster"].astype(np.int64).to_numpy()
    categories = frame["category"].to_numpy(dtype=str)
    cluster_category = {
        int(cluster): str(category)
        for cluster, category in zip(assignment, categories)
    }
    return ParsedAssignment(
        assignment=assignment,
        categories=categories,
        cluster_category=dict(sorted(cluster_category.items())),
        footer=footer,
    )


def write_report(
    report: SweepReport, path: PathLike, include_timings: bool = True
) -> Path:
    """
    Write a sweep report as a tab separated table with a header row.
    """
    path = _target(path)
    report.to_frame(include_timings=include_timings).to_csv(
        path, sep="\t", index=False, lineterminator="\n", encoding="utf-8"
    )
    return path


def read_report(path: PathLike) -> SweepReport:
    """
    Read a table written by write_report.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"File {path} does not exist.")
    frame = pd.read_csv(path, sep="\t", float_precision="round_trip")
    return SweepReport.from_frame(frame)


def write_cut_log(log: CutLog, path: PathLike, include_timing: bool = True) -> Path:
    """
    Write the diagnostic text of a cut log.
    """
    path = _target(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(log.to_text(include_timing=include_timing))
    return path


def write_labels(labels: LabelSet, path: PathLike) -> Path:
    """
    Write a label file readable by load_labels.
    """
    path = _target(path)
    frame = pd.DataFrame(list(labels.items()), columns=["index", "category"])
    frame.to_csv(path, header=False, index=False, lineterminator="\n")
    return path


def write_dataset(dataset: Dataset, path: PathLike, truth=None) -> Path:
    """
    Write a dataset as a header-less table; truth, if given, becomes column 0.
    """
    path = _target(path)
    frame = pd.DataFrame(dataset.points)
    if truth is not None:
        frame.insert(0, "truth", np.asarray(truth).astype(str))
    frame.to_csv(path, header=False, index=False, lineterminator="\n")
    return path
