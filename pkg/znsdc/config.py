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
Default settings of ZnSDC.
"""
import os
from typing import Optional, Tuple

from znsdc.utils.exceptions import InputError

SEED_ENV_VAR = "SDC_SEED"

DEFAULT_ROOT = 0
DEFAULT_MST_ALGORITHM = "prim"
DEFAULT_TRIALS = 20
DEFAULT_BUDGETS: Tuple[int, ...] = (1, 2, 5, 10, 25, 50)

# Fixed plot palette, cycled when there are more clusters than colours.
PALETTE: Tuple[str, ...] = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def resolve_seed(seed: Optional[int] = None) -> int:
    """
    Resolve the random seed of a run.

    Parameters
    ----------
    seed : int (default = None)
            Explicit seed. Takes precedence over the environment.

    Returns
    -------
    seed : int
            The explicit seed, else the value of SDC_SEED, else 0.
    """
    if seed is not None:
        return int(seed)
    env_value = os.environ.get(SEED_ENV_VAR)
    if env_value is None or env_value.strip() == "":
        return 0
    try:
        return int(env_value)
    except ValueError:
        raise InputError(f"{SEED_ENV_VAR} must be an integer, got {env_value!r}")
