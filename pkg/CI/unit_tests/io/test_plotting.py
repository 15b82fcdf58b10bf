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
Test the SVG scatter plot.
"""
import tempfile
import unittest
from pathlib import Path

import numpy as np

from znsdc.config import PALETTE
from znsdc.data.dataset import Dataset, LabelSet
from znsdc.io.plotting import emit_scatter_svg
from znsdc.pipeline.pipeline import run_sdc
from znsdc.synthetic.generators import make_three_groups
from znsdc.utils.exceptions import UnsupportedPlotError


class TestScatterSVG(unittest.TestCase):
    """
    A test class for emit_scatter_svg.
    """

    @classmethod
    def setUpClass(cls) -> None:
        """
        Cluster the three group toy data.

        Returns
        -------

        """
        cls.data = make_three_groups(n_per_group=30, seed=5)
        cls.result = run_sdc(cls.data.dataset, cls.data.labels)

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

    def test_three_clusters(self):
        """
        Test the plot of three clusters.

        Returns
        -------
        A valid SVG using exactly the first three palette colours.
        """
        path = emit_scatter_svg(
            self.data.dataset,
            self.result,
            self.data.labels,
            self.directory / "toy.svg",
            title="toy",
        )
        text = path.read_text(encoding="utf-8")
        self.assertIn("<svg", text)
        for colour in PALETTE[:3]:
            self.assertIn(colour, text)
        self.assertNotIn(PALETTE[3], text)

    def test_single_cluster(self):
        """
        Test a plot of a single cluster.

        Returns
        -------
        Only the first palette colour is used.
        """
        labels = LabelSet({0: "all"})
        result = run_sdc(self.data.dataset, labels)
        text = emit_scatter_svg(
            self.data.dataset, result, labels, self.directory / "one.svg"
        ).read_text(encoding="utf-8")
        self.assertIn(PALETTE[0], text)
        self.assertNotIn(PALETTE[1], text)

    def test_deterministic_bytes(self):
        """
        Test that the same input gives the same file.

        Returns
        -------
        Byte-identical outputs.
        """
        first = emit_scatter_svg(
            self.data.dataset, self.result, self.data.labels, self.directory / "a.svg"
        )
        second = emit_scatter_svg(
            self.data.dataset, self.result, self.data.labels, self.directory / "b.svg"
        )
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_unsupported_data(self):
        """
        Test 3D and categorical data.

        Returns
        -------
        UnsupportedPlotError.
        """
        points = np.random.default_rng(0).normal(size=(6, 3))
        dataset = Dataset.numeric(points)
        labels = LabelSet({0: "A"})
        result = run_sdc(dataset, labels)
        with self.assertRaises(UnsupportedPlotError):
            emit_scatter_svg(dataset, result, labels, self.directory / "x.svg")
        records = Dataset.categorical([["a"], ["b"]])
        result = run_sdc(records, labels)
        with self.assertRaises(UnsupportedPlotError):
            emit_scatter_svg(records, result, labels, self.directory / "y.svg")
