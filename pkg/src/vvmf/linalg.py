"""Exact rank and kernel computations over the rationals.

Rows are cleared to integers and reduced by fraction-free (Bareiss)
elimination, so all intermediate divisions are exact integer divisions.
Pivoting is deterministic: first nonzero entry in row order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        scale = 1
        frs = [Fraction(x) for x in row]
        for x in frs:
            scale = scale // gcd(scale, x.denominator) * x.denominator
        out.append([int(x * scale) for x in frs])
    return out


def _echelon(rows, ncols: int):
    """Bareiss forward elimination; returns (pivot rows, pivot columns)."""
    m = _integer_rows(rows)
    piv_cols = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            mi, mr = m[i], m[r]
            for j in range(c, ncols):
                mi[j] = (p * mi[j] - a * mr[j]) // prev
        prev = p
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], piv_cols


def rank(rows, ncols: int) -> int:
    if not rows:
        return 0
    return len(_echelon(rows, ncols)[1])


def kernel_vector(rows, ncols: int):
    """One deterministic kernel vector, first nonzero coordinate scaled to 1.

    Returns a list of Fractions, or None when the kernel is trivial.  The
    free coordinate chosen is the first non-pivot column.
    """
    if ncols == 0:
        return None
    if not rows:
        ech, piv = [], []
    else:
        ech, piv = _echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    if not free:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for i in range(len(piv) - 1, -1, -1):
        c = piv[i]
        row = ech[i]
        s = Fraction(0)
        for j in range(c + 1, ncols):
            if x[j]:
                s += row[j] * x[j]
        x[c] = -s / row[c]
    lead = next(v for v in x if v != 0)
    return [v / lead for v in x]
