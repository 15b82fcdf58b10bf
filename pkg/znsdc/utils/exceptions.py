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
Exceptions raised by ZnSDC.
"""


class SDCError(Exception):
    """
    Base class of all ZnSDC errors.
    """


class InputError(SDCError, ValueError):
    """
    Raised when user supplied data, labels or files are invalid.
    """


class UnsupportedPlotError(InputError):
    """
    Raised when a plot is requested for data it cannot display.
    """


class CutError(SDCError, RuntimeError):
    """
    Raised when a forest operation is applied to an edge or node in the wrong state,
    e.g. cutting a node that is already a root.
    """


class InvariantViolation(SDCError, AssertionError):
    """
    Raised when an internal invariant of the algorithm does not hold.

    Seeing this error means there is a bug in ZnSDC, not in the input.
    """
