"""Uncompiled implementation of the pairwise order scan (numpy, row blocks)."""

from __future__ import annotations

import numpy as np

BLOCK_ROWS = 256


def _relation(u: np.ndarray, v: np.ndarray, rows: slice, strict: bool) -> np.ndarray:
    pu, pv = u[rows, None], v[rows, None]
    if strict:
        return (u[None, :] > pu) & (v[None, :] < pv)
    return (u[None, :] >= pu) & (v[None, :] <= pv)


def first_mismatch(su, sv, iu, iv, strict: bool = False) -> int:
    """Row-major index ``i*m + j`` of the first pair whose relation changes, or -1."""
    su, sv, iu, iv = (np.asarray(a, dtype=np.int64) for a in (su, sv, iu, iv))
    m = su.shape[0]
    if sv.shape[0] != m or iu.shape[0] != m or iv.shape[0] != m:
        raise ValueError("rank arrays must have equal length")
    for start in range(0, m, BLOCK_ROWS):
        rows = slice(start, min(start + BLOCK_ROWS, m))
        diff = _relation(su, sv, rows, strict) != _relation(iu, iv, rows, strict)
        flat = np.flatnonzero(diff)
        if flat.size:
            return start * m + int(flat[0])
    return -1
