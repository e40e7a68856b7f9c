# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled GF(2) column reduction with sparse sorted columns."""

from libcpp.vector cimport vector
from libcpp.algorithm cimport sort


cdef void _sym_diff(vector[int]& a, const vector[int]& b, vector[int]& out) noexcept nogil:
    cdef size_t i = 0, j = 0
    cdef size_t na = a.size(), nb = b.size()
    out.clear()
    while i < na and j < nb:
        if a[i] < b[j]:
            out.push_back(a[i])
            i += 1
        elif b[j] < a[i]:
            out.push_back(b[j])
            j += 1
        else:
            i += 1
            j += 1
    while i < na:
        out.push_back(a[i])
        i += 1
    while j < nb:
        out.push_back(b[j])
        j += 1


def reduce_boundary(columns, dims):
    """Same contract as the pure-Python ``reduce_boundary``."""
    cdef Py_ssize_t n = len(columns)
    cdef vector[vector[int]] cols
    cdef vector[int] owner
    cdef vector[int] low
    cdef vector[char] cleared
    cdef vector[int] tmp
    cdef vector[int] cdims
    cdef vector[int] order
    cdef Py_ssize_t j, idx
    cdef int piv, k, r, d, top = 0
    cols.resize(n)
    owner.assign(n, -1)
    low.assign(n, -1)
    cleared.assign(n, 0)
    cdims.resize(n)
    for j in range(n):
        col = columns[j]
        cols[j].reserve(len(col))
        for r in col:
            cols[j].push_back(r)
        sort(cols[j].begin(), cols[j].end())
        cdims[j] = dims[j]
        if cdims[j] > top:
            top = cdims[j]
    with nogil:
        # highest dimension first so clearing can skip paired columns
        order.reserve(n)
        for d in range(top, -1, -1):
            for j in range(n):
                if cdims[j] == d:
                    order.push_back(j)
        for idx in range(n):
            j = order[idx]
            if cleared[j]:
                cols[j].clear()
                continue
            while not cols[j].empty():
                piv = cols[j].back()
                k = owner[piv]
                if k < 0:
                    owner[piv] = j
                    low[j] = piv
                    cleared[piv] = 1
                    break
                _sym_diff(cols[j], cols[k], tmp)
                cols[j].swap(tmp)
    return [low[j] for j in range(n)]
