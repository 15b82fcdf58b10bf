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
Distance functions for numeric and categorical points.
"""
import numpy as np

from znsdc.data.dataset import Dataset, Metric, check_metric
from znsdc.utils.exceptions import InputError


def _as_point(point, metric: Metric) -> np.ndarray:
    """
    Convert a point to the array type its metric works on.
    """
    if metric is Metric.EUCLIDEAN:
        try:
            array = np.asarray(point, dtype=np.float64)
        except (TypeError, ValueError):
            raise InputError("The euclidean metric needs numeric points.")
        if not np.all(np.isfinite(array)):
            raise InputError("Numeric points must have finite coordinates.")
    else:
        array = np.asarray(point)
        if array.dtype.kind not in ("U", "S", "O"):
            raise InputError("The mismatch metric needs categorical points.")
    if array.ndim != 1:
        raise InputError(f"A point must be a flat vector, got shape {array.shape}.")
    return array


def distance(a, b, metric: Metric = Metric.EUCLIDEAN) -> float:
    """
    Distance between two points.

    Parameters
    ----------
    a, b : array-like shape=(dim,)
            The two points, of the same kind and dimension.
    metric : Metric
            EUCLIDEAN for numeric points, MISMATCH for categorical records.

    Returns
    -------
    distance : float
            Non-negative, symmetric, 0 for identical points. Mismatch distances are
            integer counts widened to float.
    """
    metric = Metric(metric)
    a = _as_point(a, metric)
    b = _as_point(b, metric)
    if a.shape != b.shape:
        raise InputError(
            f"Points have different dimensions: {a.shape[0]} and {b.shape[0]}."
        )
    if metric is Metric.EUCLIDEAN:
        return float(np.sqrt(np.sum((a - b) ** 2)))
    return float(np.count_nonzero(a != b))


def distance_row(dataset: Dataset, index: int, metric: Metric = None) -> np.ndarray:
    """
    Distances from one point to every point of the dataset.

    This is the only kernel the MST builders call, so every tree weight is computed
    from identical floating point operations.

    Parameters
    ----------
    dataset : Dataset
            The points.
    index : int
            Point to measure from.
    metric : Metric (default = None)
            Defaults to the data kind's metric.

    Returns
    -------
    row : np.ndarray shape=(n_points,)
    """
    if metric is None:
        metric = Metric.default_for(dataset.kind)
    metric = check_metric(dataset, metric)
    points = dataset.points
    if metric is Metric.EUCLIDEAN:
        return np.sqrt(np.sum((points - points[index]) ** 2, axis=1))
    return np.count_nonzero(points != points[index], axis=1).astype(np.float64)


def distance_matrix(dataset: Dataset, metric: Metric = None) -> np.ndarray:
    """
    Full (n, n) distance matrix.

    Only meant for small datasets, e.g. the brute-force oracles.
    """
    return np.stack(
        [distance_row(dataset, i, metric) for i in range(dataset.n_points)]
    )


__all__ = ["distance", "distance_row", "distance_matrix"]
