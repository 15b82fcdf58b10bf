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
Test the result writers and their readers.
"""
import tempfile
import unittest
from pathlib import Path

import numpy as np

from znsdc.data.dataset import Dataset, LabelSet
from znsdc.io.loaders import DataFileSpec, LabelFileSpec, load_labels, load_numeric
from znsdc.io.writers import (
    read_assignment,
    read_report,
    write_assignment,
    write_cut_log,
    write_dataset,
    write_labels,
    write_report,
)
from znsdc.pipeline.pipeline import run_sdc
from znsdc.pipeline.sweep import sweep
from znsdc.synthetic.generators import make_three_groups
from znsdc.utils.exceptions import InputError


class TestWriters(unittest.TestCase):
    """
    A test class for the writers.
    """

    @classmethod
    def setUpClass(cls) -> None:
        """
        Cluster the chain example.

        Returns
        -------

        """
        cls.labels = LabelSet({0: "A", 4: "B"})
        cls.result = run_sdc(
            Dataset.numeric([[0.0], [1.0], [6.0], [8.0], [12.0]]), cls.labels
        )

    def setUp(self) -> None:
        """
        Create a scratch directory.

        Returns
        -------

        """
        self._scratch = tempfile.TemporaryDirectory()
        self.directory = Path(self._scratch.name)

    def tearDown(self) -> None:
        """
        Remove the scratch directory.

        Returns
        -------

        """
        self._scratch.cleanup()

    def test_assignment_file(self):
        """
        Test the assignment file of the chain example.

        Returns
        -------
        Five point lines and a footer.
        """
        path = write_assignment(
            self.result, self.directory / "out" / "chain.csv", include_timings=False
        )
        self.assertEqual(
            path.read_text(encoding="utf-8"),
            "0,0,A\n1,0,A\n2,1,B\n3,1,B\n4,1,B\n# n_clusters=2\n# n_subtrees=2\n",
        )

    def test_assignment_round_trip(self):
        """
        Test reading back an assignment file with timings.

        Returns
        -------
        Identical assignment and categories, also for categories that need quoting.
        """
        path = write_assignment(self.result, self.directory / "chain.csv")
        parsed = read_assignment(path)
        np.testing.assert_array_equal(parsed.assignment, self.result.assignment)
        np.testing.assert_array_equal(parsed.categories, self.result.categories)
        self.assertEqual(parsed.cluster_category, self.result.cluster_category)
        self.assertEqual(parsed.footer["n_clusters"], "2")
        self.assertEqual(
            float(parsed.footer["time_cut_s"]), self.result.timing["cut"]
        )

        labels = LabelSet({0: "Smith, J", 4: 'say "hi"'})
        result = run_sdc(Dataset.numeric([[0.0], [1.0], [6.0], [8.0], [12.0]]), labels)
        path = write_assignment(result, self.directory / "quoted.csv")
        parsed = read_assignment(path)
        np.testing.assert_array_equal(
            parsed.categories, ["Smith, J"] * 2 + ['say "hi"'] * 3
        )
        self.assertEqual(parsed.cluster_category, result.cluster_category)
        self.assertEqual(parsed.footer["n_clusters"], "2")

    def test_empty_path(self):
        """
        Test writing to an empty path.

        Returns
        -------
        InputError.
        """
        with self.assertRaises(InputError):
            write_assignment(self.result, "")
        with self.assertRaises(InputError):
            read_assignment(self.directory / "missing.csv")

    def test_report_round_trip(self):
        """
        Test writing and reading a sweep report.

        Returns
        -------
        Equal levels.
        """
        data = make_three_groups(n_per_group=15, seed=0)
        report = sweep(data.dataset, data.truth, [1, 2], trials=3, seed=5)
        path = write_report(report, self.directory / "report.tsv")
        self.assertEqual(read_report(path).levels, report.levels)
        header = path.read_text(encoding="utf-8").splitlines()[0]
        self.assertEqual(header.split("\t")[0], "budget")

    def test_cut_log(self):
        """
        Test the cut log file.

        Returns
        -------
        The text of the log.
        """
        path = write_cut_log(
            self.result.cut_log, self.directory / "cuts.txt", include_timing=False
        )
        self.assertEqual(
            path.read_text(encoding="utf-8"),
            self.result.cut_log.to_text(include_timing=False),
        )

    def test_labels_and_dataset(self):
        """
        Test that written labels and datasets load back unchanged.

        Returns
        -------
        Same labels and truth, points up to the last bit.
        """
        data = make_three_groups(n_per_group=10, seed=8)
        labels_path = write_labels(data.labels, self.directory / "labels.csv")
        self.assertEqual(load_labels(LabelFileSpec(labels_path)), data.labels)

        data_path = write_dataset(data.dataset, self.directory / "data.csv", data.truth)
        loaded = load_numeric(DataFileSpec(data_path, truth_column=0))
        np.testing.assert_allclose(
            loaded.dataset.points, data.dataset.points, rtol=1e-14, atol=0
        )
        np.testing.assert_array_equal(loaded.truth, data.truth)
