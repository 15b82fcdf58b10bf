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
Command line interface of ZnSDC.
"""
import contextlib
import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.table import Table

from znsdc.config import (
    DEFAULT_BUDGETS,
    DEFAULT_MST_ALGORITHM,
    DEFAULT_TRIALS,
    resolve_seed,
)
from znsdc.data.dataset import Metric
from znsdc.io.loaders import (
    DataFileSpec,
    DataFormat,
    LabelFileSpec,
    load_dataset,
    load_labels,
)
from znsdc.io.plotting import emit_scatter_svg
from znsdc.io.writers import (
    write_assignment,
    write_cut_log,
    write_dataset,
    write_labels,
    write_report,
)
from znsdc.pipeline.pipeline import error_rate, misclassification_count, run_sdc
from znsdc.pipeline.sweep import sweep as run_sweep
from znsdc.synthetic.generators import make_blobs_and_arcs, make_three_groups
from znsdc.testing.selfcheck import run_selfcheck
from znsdc.utils.exceptions import InputError, SDCError
from znsdc.utils.log import configure_logging

logger = logging.getLogger(__name__)
console = Console()

app = typer.Typer(
    name="znsdc",
    help="Semi-supervised divisive clustering on minimal spanning trees.",
    add_completion=False,
)

SYNTHETIC_KINDS = {"three-groups": make_three_groups, "blobs-arcs": make_blobs_and_arcs}


@contextlib.contextmanager
def _exit_on_error():
    """
    Turn library and file errors into a diagnostic and exit code 1.
    """
    try:
        yield
    except (SDCError, OSError) as err:
        logger.error(str(err))
        raise typer.Exit(code=1)


def _data_spec(data: Path, metric: Metric, truth_col, delimiter) -> DataFileSpec:
    data_format = (
        DataFormat.NUMERIC_CSV
        if Metric(metric) is Metric.EUCLIDEAN
        else DataFormat.CATEGORICAL_CSV
    )
    return DataFileSpec(
        path=data, format=data_format, truth_column=truth_col, delimiter=delimiter
    )


def _parse_budgets(budgets: str) -> List[int]:
    try:
        return [int(value) for value in budgets.split(",") if value.strip()]
    except ValueError:
        raise typer.BadParameter(f"Budgets must be comma separated integers: {budgets}")


@app.command()
def cluster(
    data: Path = typer.Option(..., "--data", help="Data file, one point per row."),
    labels: Path = typer.Option(..., "--labels", help="Label file: index,category."),
    metric: Metric = typer.Option(Metric.EUCLIDEAN, "--metric", help="Distance."),
    truth_col: Optional[int] = typer.Option(
        None, "--truth-col", help="Column with the ground truth."
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Assignment file."),
    plot: Optional[Path] = typer.Option(None, "--plot", help="SVG scatter plot."),
    cut_log: Optional[Path] = typer.Option(None, "--cut-log", help="Cut log file."),
    delimiter: str = typer.Option(",", "--delimiter", help="Cell separator."),
    root: int = typer.Option(0, "--root", help="Root node of the in-tree."),
    algorithm: str = typer.Option(DEFAULT_MST_ALGORITHM, "--algorithm"),
    timings: bool = typer.Option(True, "--timings/--no-timings"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """
    Cluster a dataset from a label file.
    """
    configure_logging(verbose)
    with _exit_on_error():
        dataset, truth = load_dataset(_data_spec(data, metric, truth_col, delimiter))
        label_set = load_labels(LabelFileSpec(path=labels, delimiter=delimiter))
        result = run_sdc(dataset, label_set, metric, root=root, algorithm=algorithm)

        console.print(
            f"{result.n_clusters} clusters from {result.n_subtrees} sub-trees, "
            f"{result.cut_log.n_cuts} cuts"
        )
        if truth is not None:
            rate = error_rate(result, truth, label_set)
            wrong = misclassification_count(result, truth, label_set)
            console.print(f"error rate {rate:.4f} ({wrong} wrong)")
        if out is not None:
            write_assignment(result, out, include_timings=timings)
        if cut_log is not None:
            write_cut_log(result.cut_log, cut_log, include_timing=timings)
        if plot is not None:
            emit_scatter_svg(dataset, result, label_set, plot)


@app.command()
def sweep(
    data: Path = typer.Option(..., "--data", help="Data file with a truth column."),
    truth_col: int = typer.Option(..., "--truth-col", help="Ground-truth column."),
    metric: Metric = typer.Option(Metric.MISMATCH, "--metric", help="Distance."),
    budgets: str = typer.Option(
        ",".join(map(str, DEFAULT_BUDGETS)), "--budgets", help="Labels per category."
    ),
    trials: int = typer.Option(DEFAULT_TRIALS, "--trials", help="Draws per budget."),
    seed: Optional[int] = typer.Option(None, "--seed", envvar="SDC_SEED"),
    report: Path = typer.Option(..., "--report", help="Output TSV."),
    threads: int = typer.Option(1, "--threads", help="Parallel trials."),
    stratified: bool = typer.Option(True, "--stratified/--random"),
    delimiter: str = typer.Option(",", "--delimiter", help="Cell separator."),
    timings: bool = typer.Option(True, "--timings/--no-timings"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """
    Error rate versus number of labels over repeated random draws.
    """
    configure_logging(verbose)
    budget_list = _parse_budgets(budgets)
    with _exit_on_error():
        dataset, truth = load_dataset(_data_spec(data, metric, truth_col, delimiter))
        result = run_sweep(
            dataset,
            truth,
            budget_list,
            trials=trials,
            seed=resolve_seed(seed),
            metric=metric,
            stratified=stratified,
            threads=threads,
            progress=True,
        )
        write_report(result, report, include_timings=timings)

        table = Table(title=f"Label sweep ({trials} trials)")
        for column in ("budget", "mean error", "stderr", "sub-trees", "cut ms"):
            table.add_column(column, justify="right")
        for level in result.levels:
            table.add_row(
                str(level.budget),
                f"{level.mean_error:.4f}",
                f"{level.stderr_error:.4f}",
                f"{level.mean_subtrees:.1f}",
                f"{level.mean_cut_ms:.2f}",
            )
        console.print(table)
        console.print(f"MST construction: {result.mst_seconds * 1e3:.1f} ms")


@app.command()
def selfcheck(
    seed: Optional[int] = typer.Option(None, "--seed", envvar="SDC_SEED"),
    scale: float = typer.Option(1.0, "--scale", help="Instances multiplier."),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """
    Compare the algorithms with brute-force oracles on small random inputs.
    """
    configure_logging(verbose)
    with _exit_on_error():
        outcomes = run_selfcheck(seed=resolve_seed(seed), scale=scale, progress=True)
    table = Table(title="ZnSDC selfcheck")
    for column in ("suite", "instances", "result", "detail"):
        table.add_column(column)
    for outcome in outcomes:
        table.add_row(
            outcome.name,
            str(outcome.instances),
            "pass" if outcome.passed else "FAIL",
            outcome.detail,
        )
    console.print(table)
    if not all(outcome.passed for outcome in outcomes):
        raise typer.Exit(code=1)


@app.command()
def synth(
    kind: str = typer.Option("blobs-arcs", "--kind", help="three-groups|blobs-arcs"),
    data: Path = typer.Option(..., "--data", help="Output data file."),
    labels: Path = typer.Option(..., "--labels", help="Output label file."),
    seed: Optional[int] = typer.Option(None, "--seed", envvar="SDC_SEED"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """
    Write a generated 2D dataset (truth in column 0) and its suggested labels.
    """
    configure_logging(verbose)
    with _exit_on_error():
        if kind not in SYNTHETIC_KINDS:
            raise InputError(
                f"Unknown dataset kind '{kind}', choose from {sorted(SYNTHETIC_KINDS)}."
            )
        generated = SYNTHETIC_KINDS[kind](seed=resolve_seed(seed))
        write_dataset(generated.dataset, data, truth=generated.truth)
        write_labels(generated.labels, labels)
        logger.info(
            "Wrote %d points and %d labels",
            generated.dataset.n_points,
            len(generated.labels),
        )
