"""Eisenstein-form operators, the root-determined construction, and residuals."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vvmf import (
    EisensteinOperator,
    Mmde,
    PreconditionError,
    QSeries,
    appendix_family,
    apply,
    delta,
    indicial_polynomial,
    unique_operator,
)


def test_operator_guards():
    with pytest.raises(PreconditionError):
        EisensteinOperator(0, 4, ())
    with pytest.raises(PreconditionError):
        EisensteinOperator(3, 4, (1,))  # needs order-1 coefficients
    with pytest.raises(PreconditionError):
        Mmde("not an operator")
    base = EisensteinOperator(2, 2, (Fraction(-1, 48),))
    with pytest.raises(PreconditionError):
        Mmde(base, cusp_c=1)  # cusp term only at order 6
    with pytest.raises(PreconditionError):
        Mmde(base, roots=(Fraction(1, 12),))
    assert Mmde(base, cusp_c=None).cusp_c is None


def test_cusp_zero_collapses_to_none():
    base = EisensteinOperator(6, 0, (0, 0, 0, 0, 0))
    assert Mmde(base, cusp_c=0).cusp_c is None
    assert Mmde(base, cusp_c=Fraction(2, 3)).cusp_c == Fraction(2, 3)


def test_unique_operator_order_two():
    op = unique_operator([Fraction(1, 12), Fraction(5, 12)])
    assert op.weight == 2
    assert op.alphas == (Fraction(-1, 48),)
    assert indicial_polynomial(op) == (Fraction(5, 144), Fraction(-1, 2))
    assert op.indicial_roots == (Fraction(1, 12), Fraction(5, 12))


def test_unique_operator_weight_formula():
    cases = [
        ([0, Fraction(1, 3), Fraction(2, 3)], 2),
        ([Fraction(1, 12), Fraction(1, 4)], 1),
        ([Fraction(1, 6), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)], 2),
    ]
    for roots, k in cases:
        op = unique_operator(roots)
        lam = sum(roots, Fraction(0))
        assert op.weight == k == Fraction(12) * lam / len(roots) + 1 - len(roots)


def test_unique_operator_permutation_invariant():
    roots = [Fraction(7, 10), Fraction(1, 5), Fraction(-1, 2), Fraction(9, 10)]
    a = unique_operator(roots)
    b = unique_operator(list(reversed(roots)))
    assert a.base == b.base
    assert a.indicial_roots == b.indicial_roots


def test_unique_operator_needs_a_root():
    with pytest.raises(PreconditionError):
        unique_operator([])


def test_indicial_roots_recovered_without_cache():
    roots = [0, Fraction(1, 4), Fraction(5, 6), Fraction(3, 2)]
    op = unique_operator(roots)
    fresh = Mmde(EisensteinOperator(op.order, op.weight, op.alphas))
    assert fresh.indicial_roots == tuple(sorted(Fraction(r) for r in roots))


def test_irrational_indicial_roots_rejected():
    # indicial polynomial x^2 - 2: weight -1 with alpha_4 = -287/144
    op = Mmde(EisensteinOperator(2, -1, (Fraction(-287, 144),)))
    assert indicial_polynomial(op) == (Fraction(-2), Fraction(0))
    with pytest.raises(PreconditionError):
        op.indicial_roots


def test_record_round_trip():
    op = unique_operator([Fraction(1, 12), Fraction(5, 12)])
    rec = op.to_record()
    assert rec == {
        "order": 2,
        "weight": "2",
        "alphas": ["-1/48"],
        "indicial_roots": ["1/12", "5/12"],
    }
    back = Mmde.from_record(rec)
    assert back.base == op.base and back.indicial_roots == op.indicial_roots

    fam = appendix_family([Fraction(n, 6) for n in range(1, 6)], Fraction(-3))
    rec2 = fam.to_record()
    assert rec2["cusp_c"] == "-3"
    back2 = Mmde.from_record(rec2)
    assert back2.base == fam.base and back2.cusp_c == Fraction(-3)


def test_record_rejects_wrong_roots():
    rec = unique_operator([Fraction(1, 12), Fraction(5, 12)]).to_record()
    rec["indicial_roots"] = ["1/12", "7/12"]
    with pytest.raises(PreconditionError):
        Mmde.from_record(rec)
    rec["indicial_roots"] = ["1/12"]
    with pytest.raises(PreconditionError):
        Mmde.from_record(rec)


def test_apply_annihilates_delta():
    op = unique_operator([1])
    assert op.weight == 12
    assert apply(op, delta(25)).is_zero


def test_apply_matches_direct_ladder():
    # residual of the Eisenstein-form operator on a non-solution is the
    # full combination, checked against an independent termwise assembly
    from vvmf import eisenstein, iterate_derivative, mul

    op = unique_operator([0, Fraction(1, 3), Fraction(2, 3)])
    f = eisenstein(4, 15)
    direct = iterate_derivative(f, op.weight, 3)
    direct = direct + op.alphas[0] * mul(eisenstein(4, 15), iterate_derivative(f, op.weight, 1))
    direct = direct + op.alphas[1] * mul(eisenstein(6, 15), f)
    assert apply(op, f) == direct
    assert not apply(op, f).is_zero


def test_apply_rejects_non_series():
    with pytest.raises(PreconditionError):
        apply(unique_operator([1]), "q")


def test_appendix_family_shape():
    lam = [Fraction(n, 6) for n in range(1, 6)]
    fam = appendix_family(lam, 0)
    assert fam.order == 6 and fam.weight == 0
    assert fam.cusp_c is None
    assert fam.alphas[-1] == 0
    assert fam.indicial_roots == tuple([Fraction(0)] + lam)
    factor = unique_operator(lam)
    assert fam.alphas[:-1] == factor.alphas
    # roots are frozen at construction, independent of the cusp deformation
    assert appendix_family(lam, 5).indicial_roots == fam.indicial_roots


def test_appendix_family_guards():
    with pytest.raises(PreconditionError):
        appendix_family([Fraction(1, 2)] * 4, 0)
    with pytest.raises(PreconditionError):
        appendix_family([0, 0, 0, 0, 1], 0)  # sum is not 5/2


def test_appendix_family_cusp_shift_on_constants():
    # the weight-0 ladder kills constants, so the residual on 1 is exactly c*Delta
    lam = [Fraction(n, 6) for n in range(1, 6)]
    one = QSeries.one(12)
    assert apply(appendix_family(lam, 0), one).is_zero
    residual = apply(appendix_family(lam, 1), one)
    assert (residual - delta(12)).is_zero
