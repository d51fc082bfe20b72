# cython: language_level=3
"""Compiled convolution kernel.

Operands are plain Python ints (arbitrary precision), so the win over the
pure version comes from C-level loop and list indexing, not from machine
arithmetic.
"""


def convolve(list a, list b, Py_ssize_t n_out):
    """Truncated Cauchy product of two integer coefficient lists."""
    cdef Py_ssize_t i, j, na, nb, jmax
    cdef list out = [0] * n_out
    cdef object ai, bj
    na = len(a)
    nb = len(b)
    if na > n_out:
        na = n_out
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        jmax = n_out - i
        if nb < jmax:
            jmax = nb
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out
