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
Datasets, partial label sets and metrics used by SDC.
"""
import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from znsdc.utils.exceptions import InputError


class DataKind(str, enum.Enum):
    """
    Attribute type shared by all points of a dataset.
    """

    NUMERIC = "numeric"
    CATEGORICAL = "categorical"


class Metric(str, enum.Enum):
    """
    Distance used to weigh the edges of the complete graph.

    EUCLIDEAN is the default for numeric vectors, MISMATCH counts the columns in
    which two categorical records differ.
    """

    EUCLIDEAN = "euclidean"
    MISMATCH = "mismatch"

    @property
    def kind(self) -> DataKind:
        """
        The data kind this metric is defined on.
        """
        if self is Metric.EUCLIDEAN:
            return DataKind.NUMERIC
        return DataKind.CATEGORICAL

    @classmethod
    def default_for(cls, kind: DataKind) -> "Metric":
        """
        Default metric of a data kind.
        """
        if DataKind(kind) is DataKind.NUMERIC:
            return cls.EUCLIDEAN
        return cls.MISMATCH


@dataclass(frozen=True)
class Dataset:
    """
    Immutable collection of points to cluster.

    Attributes
    ----------
    points : np.ndarray shape=(n_points, dim)
            float64 coordinates for numeric data, unicode tokens for categorical
            data. Missing-value tokens such as "?" are ordinary symbols.
    kind : DataKind
            Attribute type of every point.
    """

    points: np.ndarray
    kind: DataKind = DataKind.NUMERIC

    def __post_init__(self):
        kind = DataKind(self.kind)
        if kind is DataKind.NUMERIC:
            try:
                points = np.array(self.points, dtype=np.float64)
            except (TypeError, ValueError) as err:
                raise InputError(f"Numeric dataset contains non-numeric values: {err}")
        else:
            try:
                points = np.array(self.points, dtype=str)
            except (TypeError, ValueError) as err:
                raise InputError(f"Categorical records are not rectangular: {err}")

        if points.ndim != 2:
            raise InputError(
                f"Points must form a (n_points, dim) table, got shape {points.shape}."
            )
        if points.shape[0] < 2:
            raise InputError(f"At least 2 points are required, got {points.shape[0]}.")
        if points.shape[1] < 1:
            raise InputError("Points need at least one feature column.")
        if kind is DataKind.NUMERIC and not np.all(np.isfinite(points)):
            row, column = np.argwhere(~np.isfinite(points))[0]
            raise InputError(
                f"Non-finite coordinate at point {row}, column {column}: "
                f"{points[row, column]}"
            )

        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "kind", kind)

    @classmethod
    def numeric(cls, points) -> "Dataset":
        """
        Build a numeric dataset from an array-like of shape (n_points, dim).
        """
        return cls(points=points, kind=DataKind.NUMERIC)

    @classmethod
    def categorical(cls, records) -> "Dataset":
        """
        Build a categorical dataset from rows of symbols.
        """
        return cls(points=records, kind=DataKind.CATEGORICAL)

    @property
    def n_points(self) -> int:
        """
        Number of points n.
        """
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        """
        Number of feature columns.
        """
        return int(self.points.shape[1])

    def __len__(self):
        return self.n_points


@dataclass(frozen=True)
class LabelSet:
    """
    Partial mapping from point index to category id.

    Attributes
    ----------
    entries : dict
            point index -> category id. Stored sorted by index.
    """

    entries: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        ordered: Dict[int, str] = {}
        for index in sorted(self.entries):
            if isinstance(index, (bool, np.bool_)) or not isinstance(
                index, (int, np.integer)
            ):
                raise InputError(f"Label index must be an integer, got {index!r}.")
            ordered[int(index)] = str(self.entries[index])
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, str]]) -> "LabelSet":
        """
        Build a label set from (index, category) pairs.

        Raises
        ------
        InputError
                If an index is labeled twice.
        """
        entries: Dict[int, str] = {}
        for index, category in pairs:
            index = int(index)
            if index in entries:
                raise InputError(f"Point {index} is labeled more than once.")
            entries[index] = str(category)
        return cls(entries)

    @classmethod
    def from_truth(cls, truth, indices: Iterable[int]) -> "LabelSet":
        """
        Label the given indices with their ground-truth categories.
        """
        return cls.from_pairs((int(i), truth[int(i)]) for i in indices)

    @property
    def categories(self) -> Tuple[str, ...]:
        """
        Distinct category ids, sorted.
        """
        return tuple(sorted(set(self.entries.values())))

    @property
    def n_categories(self) -> int:
        """
        Number of distinct categories.
        """
        return len(set(self.entries.values()))

    @property
    def indices(self) -> np.ndarray:
        """
        Labeled point indices in ascending order.
        """
        return np.fromiter(self.entries.keys(), dtype=np.int64, count=len(self))

    def category_of(self, index: int) -> Optional[str]:
        """
        Category of a point, None if it is unlabeled.
        """
        return self.entries.get(int(index))

    def items(self):
        """
        (index, category) pairs in ascending index order.
        """
        return self.entries.items()

    def __len__(self):
        return len(self.entries)

    def __contains__(self, index):
        return int(index) in self.entries


def validate(
    dataset: Dataset, labels: LabelSet, metric: Optional[Metric] = None
) -> Tuple[Dataset, LabelSet]:
    """
    Check a dataset and its labels before the pipeline runs.

    Dataset invariants are enforced at construction, so this checks the labels
    against the dataset and the metric against the data kind.

    Parameters
    ----------
    dataset : Dataset
            Points to cluster.
    labels : LabelSet
            Supervision for the points.
    metric : Metric (default = None)
            Metric that will be used, checked for compatibility if given.

    Returns
    -------
    (dataset, labels) : tuple
            The unchanged inputs.
    """
    if len(labels) == 0:
        raise InputError("The label set is empty; at least one label is needed.")
    for index in labels.entries:
        if index < 0 or index >= dataset.n_points:
            raise InputError(
                f"Label index {index} is out of range for {dataset.n_points} points."
            )
    if metric is not None:
        check_metric(dataset, metric)
    return dataset, labels


def check_metric(dataset: Dataset, metric: Metric) -> Metric:
    """
    Ensure the metric is defined on the dataset's kind.
    """
    metric = Metric(metric)
    if metric.kind is not dataset.kind:
        raise InputError(
            f"Metric '{metric.value}' cannot be used on {dataset.kind.value} data."
        )
    return metric
