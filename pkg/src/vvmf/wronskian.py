"""Modular Wronskians of component tuples and their eta factorization.

The modular Wronskian stacks a vector with its iterated modular derivatives
and takes the exact determinant.  For a fundamental system with exponent
sum lambda + n it factors as eta^{24(lambda+n)} times a holomorphic form
that does not vanish at the cusp.
"""

from __future__ import annotations

from fractions import Fraction

from .deriv import VvmfVector, derivative_vector
from .errors import FactorizationError, PrecisionError, PreconditionError
from .forms import eta_power
from .qseries import QSeries, divide_exact, mul

_PRECISION_MARGIN = 2


def modular_wronskian(F: VvmfVector) -> QSeries:
    """Determinant of the d x d matrix whose rows are F, DF, ..., D^{d-1}F."""
    d = F.d
    if F.precision < d + _PRECISION_MARGIN:
        raise PrecisionError(
            "wronskian needs component precision at least %d" % (d + _PRECISION_MARGIN)
        )
    rows = [F]
    for _ in range(d - 1):
        rows.append(derivative_vector(rows[-1]))
    mat = [list(r.components) for r in rows]
    # determinant by expanding one row at a time over column subsets
    minors = {(j,): mat[0][j] for j in range(d)}
    for i in range(1, d):
        nxt = {}
        for cols, minor in minors.items():
            if minor.is_zero:
                continue
            for j in range(d):
                if j in cols:
                    continue
                pos = 0
                while pos < len(cols) and cols[pos] < j:
                    pos += 1
                term = mul(minor, mat[i][j])
                if (len(cols) - pos) % 2 == 1:
                    term = -term
                key = cols[:pos] + (j,) + cols[pos:]
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        minors = nxt
        if not minors:
            break
    full = tuple(range(d))
    det = minors.get(full)
    if det is None:
        n = min(r.precision for r in rows)
        det = QSeries(sum(F.exponents, Fraction(0)), [Fraction(0)] * (n + 1))
    return det


def weight_lower_bound(d: int, lam, n):
    """Minimal possible weight 12(lam+n)/d + 1 - d for a d-dimensional system
    with exponent sum lam + n."""
    if not isinstance(d, int) or d < 1:
        raise PreconditionError("dimension must be an integer >= 1")
    if not isinstance(n, int) or n < 0:
        raise PreconditionError("shift total must be an integer >= 0")
    lam = Fraction(lam)
    return Fraction(12) * (lam + n) / d + 1 - d


def wronskian_factorization(F: VvmfVector):
    """Factor the modular Wronskian as eta^{24 e} g.

    Returns (e, g, weight of g) where e is the sum of the leading exponents
    of the components and g is holomorphic with nonzero constant term.
    Linearly dependent components are rejected.
    """
    d, k = F.d, F.weight
    exponent = Fraction(0)
    for f in F.components:
        if f.is_zero:
            raise PreconditionError("zero component, system is degenerate")
        exponent += f.beta
    w = modular_wronskian(F)
    if w.is_zero:
        raise PreconditionError("wronskian vanishes, components are dependent")
    eta = eta_power(24 * exponent, w.precision)
    g = divide_exact(w, eta, min(w.precision, eta.precision))
    g_weight = d * (d + k - 1) - 12 * exponent
    if g.beta != 0:
        raise FactorizationError(
            "quotient vanishes at the cusp; exponent sum does not match the wronskian order"
        )
    return exponent, g, g_weight
