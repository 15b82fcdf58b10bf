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
Loading datasets and label files from delimited text.
"""
import enum
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Optional, Union

import numpy as np
import pandas as pd

from znsdc.data.dataset import Dataset, LabelSet
from znsdc.utils.exceptions import InputError

logger = logging.getLogger(__name__)

_NAN_TOKENS = {"nan", "+nan", "-nan"}


class DataFormat(str, enum.Enum):
    """
    Supported data file formats.
    """

    NUMERIC_CSV = "numeric-csv"
    CATEGORICAL_CSV = "categorical-csv"


@dataclass(frozen=True)
class DataFileSpec:
    """
    Description of a data file.

    Attributes
    ----------
    path : str or Path
            Location of the table. One point per row, no header.
    format : DataFormat
            Numeric or categorical cells.
    truth_column : int (default = None)
            Column holding the ground-truth category; excluded from the features.
    delimiter : str (default = ",")
            Cell separator.
    """

    path: Union[str, Path]
    format: DataFormat = DataFormat.NUMERIC_CSV
    truth_column: Optional[int] = None
    delimiter: str = ","


@dataclass(frozen=True)
class LabelFileSpec:
    """
    Description of a label file: two columns, point index and category id.

    Attributes
    ----------
    path : str or Path
            Location of the table.
    delimiter : str (default = ",")
            Cell separator.
    """

    path: Union[str, Path]
    delimiter: str = ","


class LoadedData(NamedTuple):
    """
    A dataset and, if the file declared one, its ground truth.
    """

    dataset: Dataset
    truth: Optional[np.ndarray]


def _read_table(path: Union[str, Path], delimiter: str) -> pd.DataFrame:
    """
    Read a header-less table as strings and reject ragged rows.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"File {path} does not exist.")
    try:
        frame = pd.read_csv(
            path,
            sep=delimiter,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            engine="c",
        )
    except pd.errors.EmptyDataError:
        raise InputError(f"File {path} is empty.")
    except pd.errors.ParserError as err:
        raise InputError(f"Ragged rows in {path}: {err}")

    short_rows = np.flatnonzero(frame.isna().any(axis=1).to_numpy())
    if short_rows.size > 0:
        raise InputError(
            f"Ragged rows in {path}: row {short_rows[0] + 1} has fewer than "
            f"{frame.shape[1]} fields."
        )
    return frame


def _split_truth(frame: pd.DataFrame, spec: DataFileSpec):
    if spec.truth_column is None:
        return frame, None
    column = int(spec.truth_column)
    if not 0 <= column < frame.shape[1]:
        raise InputError(
            f"Truth column {column} does not exist in a table with "
            f"{frame.shape[1]} columns."
        )
    truth = frame[column].to_numpy(dtype=str)
    return frame.drop(columns=[column]), truth


def load_numeric(spec: DataFileSpec) -> LoadedData:
    """
    Load a numeric table, one point per row.

    Parameters
    ----------
    spec : DataFileSpec
            File description.

    Returns
    -------
    loaded : LoadedData
            The dataset and the ground truth if truth_column was given.
    """
    frame, truth = _split_truth(_read_table(spec.path, spec.delimiter), spec)
    if frame.shape[1] == 0:
        raise InputError(f"No feature columns left in {spec.path}.")

    values = frame.apply(
        lambda column: pd.to_numeric(column.str.strip(), errors="coerce")
    )
    invalid = values.isna().to_numpy() | ~np.isfinite(values.to_numpy(dtype=float))
    if invalid.any():
        row, position = np.argwhere(invalid)[0]
        column = frame.columns[position]
        cell = frame.iat[row, position]
        if cell.strip().lower() in _NAN_TOKENS:
            problem = "NaN value"
        elif values.iat[row, position] == values.iat[row, position]:
            problem = "non-finite value"
        else:
            problem = "non-numeric cell"
        raise InputError(
            f"{problem} {cell!r} in {spec.path} at row {row + 1}, column {column}."
        )

    dataset = Dataset.numeric(values.to_numpy(dtype=np.float64))
    logger.info(
        "Loaded %d numeric points with %d features from %s",
        dataset.n_points,
        dataset.dim,
        spec.path,
    )
    return LoadedData(dataset=dataset, truth=truth)


def load_categorical(spec: DataFileSpec) -> LoadedData:
    """
    Load a categorical table; every cell is taken verbatim as a symbol.

    Parameters
    ----------
    spec : DataFileSpec
            File description, e.g. truth_column=0 for the UCI mushroom file.

    Returns
    -------
    loaded : LoadedData
    """
    frame, truth = _split_truth(_read_table(spec.path, spec.delimiter), spec)
    if frame.shape[1] == 0:
        raise InputError(f"No feature columns left in {spec.path}.")
    dataset = Dataset.categorical(frame.to_numpy(dtype=str))
    logger.info(
        "Loaded %d categorical records with %d columns from %s",
        dataset.n_points,
        dataset.dim,
        spec.path,
    )
    return LoadedData(dataset=dataset, truth=truth)


def load_dataset(spec: DataFileSpec) -> LoadedData:
    """
    Load a data file according to its declared format.
    """
    if DataFormat(spec.format) is DataFormat.NUMERIC_CSV:
        return load_numeric(spec)
    return load_categorical(spec)


def load_labels(spec: LabelFileSpec) -> LabelSet:
    """
    Parse a label file into a LabelSet.

    Parameters
    ----------
    spec : LabelFileSpec
            File with rows "point-index,category-id".

    Returns
    -------
    labels : LabelSet
    """
    frame = _read_table(spec.path, spec.delimiter)
    if frame.shape[1] != 2:
        raise InputError(
            f"Label file {spec.path} needs 2 columns, found {frame.shape[1]}."
        )
    pairs = []
    for row, (index, category) in enumerate(frame.itertuples(index=False), start=1):
        try:
            pairs.append((int(index.strip()), category.strip()))
        except ValueError:
            raise InputError(
                f"Label file {spec.path}, row {row}: index {index!r} is not an integer."
            )
    return LabelSet.from_pairs(pairs)
