"""Frobenius solutions of monic modular differential equations.

The operator is rewritten in powers of theta = q d/dq with holomorphic
q-series coefficients; each indicial root then seeds a recursively solved
power series.  Roots congruent modulo 1 are rejected, so the recursion
denominators never vanish.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import RationalAngle
from .deriv import VvmfVector
from .errors import CongruentRootsError, InternalCheckError, PreconditionError
from .forms import delta, eisenstein
from .mmde import EisensteinOperator, Mmde, indicial_polynomial
from .qseries import QSeries, mul, q_derivative


def theta_form(L, precision: int) -> list:
    """Coefficients H_0..H_n with L = sum_i H_i(q) theta^i, each known to
    the requested precision."""
    base = L.base if isinstance(L, Mmde) else L
    cusp = L.cusp_c if isinstance(L, Mmde) else None
    if not isinstance(base, EisensteinOperator):
        raise PreconditionError("expected an operator")
    if precision < 0:
        raise PreconditionError("precision must be >= 0")
    n, k = base.order, base.weight
    e2 = eisenstein(2, precision)
    prefixes = [[QSeries.one(precision)]]
    for t in range(n):
        w = Fraction(k + 2 * t, 12)
        cur = prefixes[-1]
        new = [QSeries.zero(precision) for _ in range(len(cur) + 1)]
        for i, a in enumerate(cur):
            new[i + 1] = new[i + 1] + a
            new[i] = new[i] + q_derivative(a) - w * mul(e2, a)
        prefixes.append(new)
    out = list(prefixes[n])
    for l in range(2, n + 1):
        alpha = base.alphas[l - 2]
        if alpha == 0:
            continue
        el = eisenstein(2 * l, precision)
        part = prefixes[n - l]
        for i, a in enumerate(part):
            out[i] = out[i] + alpha * mul(el, a)
    if cusp is not None:
        out[0] = out[0] + cusp * delta(precision)
    if not (out[n].beta == 0 and out[n].coefficient_at(Fraction(0)) == 1):
        raise InternalCheckError("theta form lost monicity")
    return out


def solve_fundamental_system(L, precision=None) -> VvmfVector:
    """Fundamental system of L as a vector of normalized Frobenius series.

    Components are ordered by increasing indicial root; each leading
    coefficient is 1.  Recorded exponents are the root cosets reduced to
    [0, 1).  Default precision is 10 times the order.
    """
    roots = sorted(L.indicial_roots)
    d = L.order
    if precision is None:
        precision = 10 * d
    if precision < 1:
        raise PreconditionError("precision must be >= 1")
    for i in range(d):
        for j in range(i + 1, d):
            if (roots[i] - roots[j]).denominator == 1:
                raise CongruentRootsError(
                    "indicial roots %s and %s differ by an integer" % (roots[i], roots[j])
                )
    hs = theta_form(L, precision)
    n = len(hs) - 1
    table = [[hs[i].coefficient_at(Fraction(u)) for u in range(precision + 1)] for i in range(n + 1)]
    ind = indicial_polynomial(L)
    if [row[0] for row in table] != list(ind) + [Fraction(1)]:
        raise InternalCheckError("theta form constant terms disagree with indicial polynomial")

    def poly_q(u, x):
        acc = Fraction(0)
        for i in range(n, -1, -1):
            acc = acc * x + table[i][u]
        return acc

    comps = []
    for lam in roots:
        a = [Fraction(1)]
        for s in range(1, precision + 1):
            acc = Fraction(0)
            for t in range(s):
                if a[t]:
                    acc += a[t] * poly_q(s - t, lam + t)
            den = poly_q(0, lam + s)
            if den == 0:
                raise InternalCheckError("recursion denominator vanished at a congruent shift")
            a.append(-acc / den)
        comps.append(QSeries(lam, a))
    exps = [lam - lam.__floor__() for lam in roots]
    return VvmfVector(L.weight, comps, exps)


def monodromy_T(F: VvmfVector) -> tuple:
    """Leading-exponent angles of the components, reduced modulo 1."""
    out = []
    for f in F.components:
        if f.is_zero:
            raise PreconditionError("zero component has no leading exponent")
        out.append(RationalAngle(f.beta))
    return tuple(out)
