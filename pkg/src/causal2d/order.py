"""Backend selection for the pairwise order scan.

The Cython extension ``_order_kernel`` is used when it has been built; set
``CAUSAL2D_PURE_PYTHON=1`` to force the numpy implementation.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _order_py

compiled_first_mismatch = None
if not os.environ.get("CAUSAL2D_PURE_PYTHON"):
    try:
        from ._order_kernel import first_mismatch as compiled_first_mismatch
    except ImportError:
        compiled_first_mismatch = None

python_first_mismatch = _order_py.first_mismatch

if compiled_first_mismatch is not None:
    BACKEND = "cython"
    first_mismatch = compiled_first_mismatch
else:
    BACKEND = "python"
    first_mismatch = python_first_mismatch


def dense_ranks(values: Sequence[Fraction]) -> np.ndarray:
    """Replace each value by its index among the sorted distinct values.

    Order comparisons (strict and non-strict) between entries are unchanged,
    so exact rationals can be scanned as small integers.
    """
    index = {v: i for i, v in enumerate(sorted(set(values)))}
    return np.fromiter((index[v] for v in values), dtype=np.int64, count=len(values))
