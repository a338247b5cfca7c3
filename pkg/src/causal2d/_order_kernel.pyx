# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled pairwise order-preservation scan over rank-encoded null coordinates."""

from libc.stdint cimport int64_t


cdef inline bint _related(int64_t pu, int64_t pv, int64_t qu, int64_t qv, bint strict) noexcept nogil:
    if strict:
        return qu > pu and qv < pv
    return qu >= pu and qv <= pv


cdef Py_ssize_t _scan(const int64_t[:] su, const int64_t[:] sv,
                      const int64_t[:] iu, const int64_t[:] iv, bint strict) noexcept nogil:
    cdef Py_ssize_t m = su.shape[0]
    cdef Py_ssize_t i, j
    for i in range(m):
        for j in range(m):
            if (_related(su[i], sv[i], su[j], sv[j], strict)
                    != _related(iu[i], iv[i], iu[j], iv[j], strict)):
                return i * m + j
    return -1


def first_mismatch(const int64_t[:] su, const int64_t[:] sv,
                   const int64_t[:] iu, const int64_t[:] iv, bint strict=False):
    """Row-major index ``i*m + j`` of the first pair whose relation changes, or -1."""
    cdef Py_ssize_t m = su.shape[0]
    if sv.shape[0] != m or iu.shape[0] != m or iv.shape[0] != m:
        raise ValueError("rank arrays must have equal length")
    cdef Py_ssize_t k
    with nogil:
        k = _scan(su, sv, iu, iv, strict)
    return k
