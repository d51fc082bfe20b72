"""Rational angles, multiplier data, and the dimension 1-5 classification."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vvmf import (
    HpSeries,
    MultiplierSpec,
    ParityUnsolvableError,
    PreconditionError,
    RationalAngle,
    ReducibilityBoundaryError,
    RepInput,
    TDeterminedRequiredError,
    classify_dim1,
    classify_dim2,
    classify_dim3,
    classify_dim4,
    classify_dim5,
    dim4_parity,
    dim5_data,
    hp_dimension,
    minimal_admissible_set,
    multiplier_values,
    t_determined_heuristic,
)

F = Fraction


def test_rational_angle_reduction_and_arithmetic():
    assert RationalAngle(F(7, 3)) == RationalAngle(F(1, 3))
    assert RationalAngle(F(-1, 4)).value == F(3, 4)
    assert (RationalAngle(F(2, 3)) + RationalAngle(F(2, 3))).value == F(1, 3)
    assert (RationalAngle(F(1, 4)) - RationalAngle(F(1, 2))).value == F(3, 4)
    assert (-RationalAngle(F(1, 8))).value == F(7, 8)
    assert (2 * RationalAngle(F(5, 8))).value == F(1, 4)
    assert str(RationalAngle(F(1, 3))) == "1/3"
    assert len({RationalAngle(F(1, 3)), RationalAngle(F(4, 3))}) == 1
    with pytest.raises(AttributeError):
        RationalAngle(0).value = F(1, 2)
    with pytest.raises(PreconditionError):
        RationalAngle(0.5)


def test_multiplier_spec():
    assert MultiplierSpec.trivial() == MultiplierSpec(0, 0)
    assert MultiplierSpec(F(23, 2), 3).cusp_parameter == F(5, 2)
    assert MultiplierSpec(0, 0).cusp_parameter == 0
    vals = multiplier_values(MultiplierSpec(F(1, 2), 1))
    assert vals["angle_T"] == RationalAngle(F(1, 8))
    assert vals["angle_S2"] == RationalAngle(F(1, 4))
    assert vals["cusp_parameter"] == F(3, 2)
    with pytest.raises(PreconditionError):
        MultiplierSpec(12, 0)
    with pytest.raises(PreconditionError):
        MultiplierSpec(-1, 0)
    with pytest.raises(PreconditionError):
        MultiplierSpec(0, 12)
    with pytest.raises(PreconditionError):
        MultiplierSpec(0, "3")


def test_minimal_admissible_set():
    lams, ls = minimal_admissible_set([F(1, 2), F(11, 12)], 3)
    assert lams == (F(3, 4), F(1, 6))
    assert ls == (0, -1)
    lams, ls = minimal_admissible_set([0], 0)
    assert lams == (F(0),) and ls == (0,)
    with pytest.raises(PreconditionError):
        minimal_admissible_set([0], 12)
    with pytest.raises(PreconditionError):
        minimal_admissible_set([0], -1)
    with pytest.raises(PreconditionError):
        minimal_admissible_set([F(3, 2)], 0)


def test_t_determined_heuristic():
    assert t_determined_heuristic([F(1, 5), F(2, 5)])
    assert t_determined_heuristic([F(1, 7)])
    assert not t_determined_heuristic([F(1, 12), F(1, 5)])
    assert not t_determined_heuristic([F(1, 24), F(5, 24), F(7, 24), F(11, 24)])
    # only proper sub-multisets matter: a full sum on the grid is fine
    assert t_determined_heuristic([F(6, 25), F(7, 25), F(8, 25), F(13, 25), F(16, 25)])


def test_rep_input_validation():
    triv = MultiplierSpec.trivial()
    with pytest.raises(PreconditionError):
        RepInput(0, (), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(2, (F(1, 5),), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(2, (F(1, 5), F(6, 5)), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(2, (F(1, 5), F(1, 5)), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(2, (F(1, 5), F(2, 5)), 2, triv)
    with pytest.raises(PreconditionError):
        RepInput(2, (F(1, 5), F(2, 5)), 1, "eta")
    with pytest.raises(ReducibilityBoundaryError):
        RepInput(2, (F(1, 2), F(1, 3)), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(4, (F(1, 5), F(2, 5), F(3, 5), F(1, 7)), 1, triv)
    with pytest.raises(PreconditionError):
        RepInput(5, (F(1, 5), F(2, 5), F(3, 5), F(4, 5), F(1, 7)), 1, triv)


def test_rep_input_t_determined_flag():
    triv = MultiplierSpec.trivial()
    auto = RepInput(2, (F(1, 5), F(2, 5)), 1, triv)
    assert auto.t_determined and not auto.t_determined_asserted
    manual = RepInput(2, (F(1, 12), F(1, 2)), 1, triv, t_determined_asserted=True)
    assert manual.t_determined and manual.t_determined_asserted
    neither = RepInput(2, (F(1, 12), F(1, 2)), 1, triv)
    assert not neither.t_determined


def test_classify_dim1():
    assert classify_dim1(0, MultiplierSpec.trivial()) == HpSeries(0, (0,))
    assert classify_dim1(6, MultiplierSpec.trivial()) == HpSeries(6, (0,))
    # a cusp parameter that pushes the exponent over 1 drops it back down
    assert classify_dim1(6, MultiplierSpec(6, 0)) == HpSeries(0, (0,))
    with pytest.raises(PreconditionError):
        classify_dim1(12, MultiplierSpec.trivial())


def test_classify_dim2_dim3():
    triv = MultiplierSpec.trivial()
    two = classify_dim2(RepInput(2, (F(1, 12), F(5, 12)), 1, triv, True))
    assert two == HpSeries(2, (0, 1))
    three = classify_dim3(RepInput(3, (0, F(1, 3), F(2, 3)), 1, triv, True))
    assert three == HpSeries(2, (0, 1, 2))
    with pytest.raises(PreconditionError):
        classify_dim2(RepInput(3, (0, F(1, 3), F(2, 3)), 1, triv, True))
    with pytest.raises(PreconditionError):
        classify_dim3(RepInput(2, (F(1, 12), F(5, 12)), 1, triv, True))


def test_dim4_parity_and_classification():
    triv = MultiplierSpec.trivial()
    angles = (F(1, 24), F(5, 24), F(7, 24), F(11, 24))
    even = RepInput(4, angles, -1, triv, t_determined_asserted=True)
    assert dim4_parity(even) == "even"
    assert classify_dim4(even) == HpSeries(1, (0, 1, 1, 2))
    odd = RepInput(4, angles, 1, triv, t_determined_asserted=True)
    assert dim4_parity(odd) == "odd"
    assert classify_dim4(odd) == HpSeries(0, (0, 1, 2, 3))


def test_dim4_parity_unsolvable():
    angles = (F(1, 5), F(11, 30), F(8, 15), F(9, 10))
    rep = RepInput(4, angles, 1, MultiplierSpec(F(1, 3), 0), t_determined_asserted=True)
    with pytest.raises(ParityUnsolvableError):
        dim4_parity(rep)


def test_dim4_requires_t_determined():
    angles = (F(1, 24), F(5, 24), F(7, 24), F(11, 24))
    rep = RepInput(4, angles, -1, MultiplierSpec.trivial())
    with pytest.raises(TDeterminedRequiredError) as exc:
        classify_dim4(rep)
    msg = str(exc.value)
    assert "{0,1,2,3}" in msg and "{0,1,1,2}" in msg


def test_dim5_requires_t_determined():
    triv = MultiplierSpec.trivial()
    rep = RepInput(5, tuple(F(n, 12) for n in range(1, 6)), 1, triv)
    with pytest.raises(TDeterminedRequiredError) as exc:
        classify_dim5(rep)
    assert "N=0..4" in str(exc.value)


DIM5_CASES = [
    (tuple(F(n, 12) for n in (1, 2, 3, 4, 5)), 0, F(-1), 0, "1+t^2+t^4+t^6+t^8"),
    (tuple(F(n, 12) for n in (1, 2, 3, 5, 7)), 1, F(2), 0, "2+2t^2+t^4"),
    (tuple(F(n, 12) for n in (1, 2, 3, 4, 6)), 2, F(4), -2, "1+t^2+2t^4+t^6"),
    (tuple(F(n, 25) for n in (6, 7, 8, 13, 16)), 3, F(8), -3, "1+2t^2+t^4+t^6"),
    (tuple(F(n, 25) for n in (1, 2, 3, 4, 15)), 4, F(8), -4, "1+2t^2+2t^4"),
]


def test_dim5_twist_classes():
    triv = MultiplierSpec.trivial()
    for angles, n, k_n, n_n, numerator in DIM5_CASES:
        rep = RepInput(5, angles, 1, triv, t_determined_asserted=True)
        data = dim5_data(rep)
        assert data["N"] == n
        assert data["k_N"] == k_n
        assert data["n_N"] == n_n
        assert data["k0"] == k_n + 2 * n_n
        h = classify_dim5(rep)
        assert h.k0 == data["k0"]
        assert h.numerator() == numerator


def test_hp_series_guards_and_numerator():
    with pytest.raises(PreconditionError):
        HpSeries(0, ())
    with pytest.raises(PreconditionError):
        HpSeries(0, (-1,))
    with pytest.raises(PreconditionError):
        HpSeries(0, (F(1, 2),))
    assert HpSeries(2, (1, 0, 2, 1)).offsets == (0, 1, 1, 2)
    assert HpSeries(2, (0, 1, 1, 2)).numerator() == "1+2t^2+t^4"
    assert HpSeries(0, (0,)).rank == 1


def test_hp_dimension_matches_level_one_dimensions():
    # offsets (0,) at weight 0 reproduce the classical dimension table
    h = HpSeries(0, (0,))
    dims = [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3]
    for i, want in enumerate(dims):
        assert hp_dimension(h, 2 * i) == want
    assert hp_dimension(h, -2) == 0
    assert hp_dimension(h, 3) == 0
    assert hp_dimension(h, F(1, 2)) == 0
    half = HpSeries(F(1, 2), (0,))
    assert hp_dimension(half, F(1, 2)) == 1
    assert hp_dimension(half, F(3, 2)) == 0
    assert hp_dimension(half, 1) == 0


def test_hp_dimension_sums_over_offsets():
    h = HpSeries(2, (0, 1, 1, 2))
    assert hp_dimension(h, 2) == 1
    assert hp_dimension(h, 4) == 2
    assert hp_dimension(h, 6) == 2
