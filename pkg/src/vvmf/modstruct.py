"""Constructive module-structure tools for vectors of q-expansions.

Generator sets from iterated modular derivatives, exact ranks of truncated
weight spaces, the search for combinations divisible by the discriminant,
division by the discriminant, and scripted verifications of the
four- and five-dimensional structure theorems plus the order-six
one-parameter family.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd

from . import linalg
from .classify import (
    RepInput,
    classify_dim4,
    classify_dim5,
    dim4_parity,
    dim5_data,
    hp_dimension,
    minimal_admissible_set,
)
from .deriv import VvmfVector, derivative_vector
from .errors import DivisibilityError, PrecisionError, PreconditionError
from .forms import delta, eisenstein, mspace_basis
from .frobenius import monodromy_T, solve_fundamental_system
from .mmde import appendix_family, apply, indicial_polynomial, unique_operator
from .qseries import QSeries, divide_exact


def _independent_components(F: VvmfVector) -> bool:
    groups: dict = {}
    for f in F.components:
        if f.is_zero:
            return False
        key = f.beta - f.beta.__floor__()
        groups.setdefault(key, []).append(f)
    for fs in groups.values():
        if len(fs) == 1:
            continue
        lo = min(f.beta for f in fs)
        hi = min(f.window_top for f in fs)
        cols = int((hi - lo).__floor__()) + 1
        if cols < len(fs):
            raise PrecisionError("not enough precision to certify independence")
        rows = [[f.coefficient_at(lo + t) for t in range(cols)] for f in fs]
        if linalg.rank(rows, cols) != len(fs):
            return False
    return True


def d_iterate_generators(F: VvmfVector, n: int) -> list:
    """[F, DF, ..., D^{n-1}F] with stepped weight tags."""
    if not isinstance(n, int) or not (1 <= n <= F.d):
        raise PreconditionError("iterate count must be in 1..d")
    if not _independent_components(F):
        raise PreconditionError("components must be linearly independent")
    out = [F]
    for _ in range(n - 1):
        out.append(derivative_vector(out[-1]))
    return out


def module_products(generators, target_weight) -> list:
    """All products b * G_i with b in the form basis of weight target - w_i.

    Generators whose gap is negative, odd, or non-integral contribute
    nothing.  Order is generator-major, then basis order.
    """
    target = Fraction(target_weight)
    out = []
    for g in generators:
        gap = target - g.weight
        if gap < 0 or gap.denominator != 1 or int(gap) % 2 != 0:
            continue
        basis = mspace_basis(int(gap), g.precision)
        for b in basis.expansions:
            out.append(g.times_form(b, int(gap)))
    return out


def _stacked_rows(vectors, max_cols=None):
    first = vectors[0]
    d = first.d
    for v in vectors:
        if v.exponents != first.exponents:
            raise PreconditionError("vectors must share recorded exponents")
    caps = []
    for j in range(d):
        lam = first.exponents[j]
        hi = min(v.components[j].window_top for v in vectors)
        cap = int((hi - lam).__floor__())
        if cap < 0:
            raise PrecisionError("component window does not reach its exponent")
        if max_cols is not None:
            cap = min(cap, max_cols - 1)
        caps.append(cap)
    rows = []
    for v in vectors:
        row = []
        for j in range(d):
            lam = first.exponents[j]
            f = v.components[j]
            row.extend(f.coefficient_at(lam + t) for t in range(caps[j] + 1))
        rows.append(row)
    return rows, sum(c + 1 for c in caps)


def vector_rank(vectors, max_cols=None) -> int:
    """Exact rank of a family of vectors sharing recorded exponents."""
    vectors = list(vectors)
    if not vectors:
        return 0
    rows, ncols = _stacked_rows(vectors, max_cols)
    return linalg.rank(rows, ncols)


def weight_space_dimension(generators, target_weight, n_samples: int) -> int:
    """Rank of the span of form-multiples of the generators at one weight.

    This is a lower bound for the dimension of the weight space; paired
    with the graded-series upper bound it certifies equality.  n_samples
    caps the coefficient window used per component.
    """
    if n_samples < 1:
        raise PreconditionError("need at least one coefficient sample")
    prods = module_products(generators, target_weight)
    if not prods:
        return 0
    rows, ncols = _stacked_rows(prods, n_samples)
    return linalg.rank(rows, ncols)


def delta_divisible_combination(vectors, kill_offsets):
    """Nonzero combination whose component j vanishes at the first
    kill_offsets[j] grid exponents lambda_j + 0 .. lambda_j + t_j - 1.

    Returns the combination with its first nonzero coefficient scaled to 1,
    or None when only the trivial combination satisfies the constraints.
    """
    vectors = list(vectors)
    if not vectors:
        raise PreconditionError("need at least one vector")
    first = vectors[0]
    for v in vectors:
        if v.weight != first.weight:
            raise PreconditionError("vectors must share one weight")
        if v.exponents != first.exponents:
            raise PreconditionError("vectors must share recorded exponents")
    kills = list(kill_offsets)
    if len(kills) != first.d:
        raise PreconditionError("one kill threshold per component")
    rows = []
    for j, t_j in enumerate(kills):
        if not isinstance(t_j, int) or t_j < 0:
            raise PreconditionError("kill thresholds are nonnegative integers")
        lam = first.exponents[j]
        for t in range(t_j):
            rows.append([v.components[j].coefficient_at(lam + t) for v in vectors])
    coeffs = linalg.kernel_vector(rows, len(vectors))
    if coeffs is None:
        return None
    out = None
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        term = v.scaled(c)
        out = term if out is None else out.plus(term)
    return out


def descend_by_delta(G: VvmfVector) -> VvmfVector:
    """Divide every component by the discriminant; weight drops by 12.

    Requires each nonzero component to vanish at all exponents below
    lambda_j + 1."""
    quots = []
    for f, lam in zip(G.components, G.exponents):
        if f.is_zero:
            quots.append(QSeries.zero(max(0, f.precision - 1)))
            continue
        off = f.beta - lam
        if off < 1:
            raise DivisibilityError(
                "component with leading exponent %s is not divisible by the discriminant"
                % f.beta
            )
        quots.append(divide_exact(f, delta(f.precision), f.precision))
    return VvmfVector(G.weight - 12, quots, G.exponents)


def _shifted_system(lams_sorted, n_shift: int, precision: int):
    roots = [lam + (1 if i < n_shift else 0) for i, lam in enumerate(lams_sorted)]
    L = unique_operator(roots)
    return L, solve_fundamental_system(L, precision)


def _grid_steps(lams, precision: int) -> int:
    """Working precision in grid steps: at least two integer windows."""
    den = 1
    for lam in lams:
        den = den * lam.denominator // _gcd(den, lam.denominator)
    return max(precision, 2 * den + 8)


def _kill_thresholds(F: VvmfVector, extra=()):
    """Thresholds forcing divisibility by the discriminant, plus one extra
    vanishing order at the chosen components."""
    return [2 if j in extra else 1 for j in range(F.d)]


def _derivative_ladder(F: VvmfVector, top: int):
    ladder = [F]
    for _ in range(top):
        ladder.append(derivative_vector(ladder[-1]))
    return ladder


def eis_candidates(F: VvmfVector, top_power: int, min_gap: int = 0) -> list:
    """Candidate vectors E_gap * D^m F at the single weight
    F.weight + 2*top_power + min_gap, one per derivative order m.

    With min_gap 0 the top term is D^{top_power} F itself and the gap-2
    slot is empty; with min_gap 4 every candidate carries an Eisenstein
    factor."""
    if min_gap not in (0, 4):
        raise PreconditionError("minimum gap must be 0 or 4")
    ladder = _derivative_ladder(F, top_power)
    out = []
    for m in range(top_power, -1, -1):
        gap = 2 * (top_power - m) + min_gap
        g = ladder[m]
        if gap == 0:
            out.append(g)
        elif gap == 2:
            continue
        else:
            out.append(g.times_form(eisenstein(gap, g.precision), gap))
    return out


def dim4_structure(rep: RepInput, precision: int = 20) -> dict:
    """Scripted verification of the four-dimensional structure theorem."""
    if rep.dimension != 4:
        raise PreconditionError("expected a four-dimensional input")
    h = classify_dim4(rep)
    parity = dim4_parity(rep)
    lams = sorted(minimal_admissible_set(rep.exponents, rep.multiplier.cusp_parameter)[0])
    lam = sum(lams)
    precision = _grid_steps(lams, precision)
    report = {
        "parity": parity,
        "k0": h.k0,
        "offsets": h.offsets,
        "numerator": h.numerator(),
    }
    if parity == "odd":
        _, F = _shifted_system(lams, 0, precision)
        report["generator_weight_matches_k0"] = F.weight == h.k0
        gens = d_iterate_generators(F, 4)
        dims = []
        for kp in range(5):
            target = h.k0 + 2 * kp
            dims.append(
                (str(target), weight_space_dimension(gens, target, precision), hp_dimension(h, target))
            )
        report["dims"] = dims
        report["dims_match"] = all(got == want for _, got, want in dims)
        return report
    _, F1 = _shifted_system(lams, 1, precision)
    report["shifted_weight"] = F1.weight
    report["shifted_weight_is_3lambda"] = F1.weight == 3 * lam
    kills = _kill_thresholds(F1)
    combo = delta_divisible_combination(eis_candidates(F1, 3, min_gap=4), kills)
    report["combination_exists"] = combo is not None
    if combo is not None:
        G = descend_by_delta(combo)
        report["descended_weight"] = G.weight
        report["descended_weight_matches_k0"] = G.weight == h.k0
        report["descended_nonzero"] = not G.is_zero()
    below = delta_divisible_combination(eis_candidates(F1, 2, min_gap=4), kills)
    report["no_vector_below_k0"] = below is None
    return report


def dim5_structure(rep: RepInput, precision: int = 16) -> dict:
    """Scripted verification of the five-dimensional structure theorem."""
    if rep.dimension != 5:
        raise PreconditionError("expected a five-dimensional input")
    data = dim5_data(rep)
    h = classify_dim5(rep)
    lams = sorted(minimal_admissible_set(rep.exponents, rep.multiplier.cusp_parameter)[0])
    precision = _grid_steps(lams, precision)
    n = data["N"]
    report = {
        "N": n,
        "k_N": data["k_N"],
        "n_N": data["n_N"],
        "k0": h.k0,
        "offsets": h.offsets,
        "numerator": h.numerator(),
    }
    _, F = _shifted_system(lams, n, precision)
    report["anchor_weight_matches"] = F.weight == data["k_N"]
    if n == 0:
        gens = d_iterate_generators(F, 5)
        report["dims_match"] = all(
            weight_space_dimension(gens, h.k0 + 2 * kp, precision)
            == hp_dimension(h, h.k0 + 2 * kp)
            for kp in range(5)
        )
        return report
    shifted = [j for j in range(5) if F.components[j].beta != F.exponents[j]]
    unshifted = [j for j in range(5) if j not in shifted]
    if n == 1:
        combo = delta_divisible_combination(eis_candidates(F, 4, min_gap=4), _kill_thresholds(F))
        report["combination_exists"] = combo is not None
        if combo is not None:
            G = descend_by_delta(combo)
            report["descended_weight_matches_k0"] = G.weight == h.k0 and not G.is_zero()
            report["two_minimal_generators"] = vector_rank([F, G]) == 2
        return report
    if n == 2:
        combo = delta_divisible_combination(eis_candidates(F, 4), _kill_thresholds(F))
        report["combination_exists"] = combo is not None
        if combo is not None:
            G = descend_by_delta(combo)
            report["descended_weight"] = G.weight
            report["descends_to_k0"] = (
                G.weight == data["k_N"] - 4 and G.weight == h.k0 and not G.is_zero()
            )
        return report
    if n == 3:
        avoid = (data["k_N"] - 6) / 12
        j1 = next(j for j in unshifted if F.exponents[j] != avoid)
        combo = delta_divisible_combination(eis_candidates(F, 3), _kill_thresholds(F))
        report["combination_exists"] = combo is not None
        g1 = descend_by_delta(combo) if combo is not None else None
        if g1 is not None:
            report["first_descent_to_k0"] = g1.weight == h.k0 and not g1.is_zero()
        combo2 = delta_divisible_combination(
            eis_candidates(F, 4), _kill_thresholds(F, extra=(j1,))
        )
        report["second_combination_exists"] = combo2 is not None
        if g1 is not None and combo2 is not None:
            g2 = descend_by_delta(combo2)
            report["second_descent_weight"] = g2.weight
            report["independent_pair"] = vector_rank([derivative_vector(g1), g2]) == 2
        return report
    avoid1 = (data["k_N"] - 8) / 12
    avoid2 = (data["k_N"] - 6) / 12
    i1 = next(j for j in shifted if F.exponents[j] != avoid1)
    i2 = next(j for j in shifted if j != i1 and F.exponents[j] != avoid2)
    combo = delta_divisible_combination(eis_candidates(F, 2), _kill_thresholds(F))
    report["combination_exists"] = combo is not None
    g1 = descend_by_delta(combo) if combo is not None else None
    if g1 is not None:
        report["first_descent_to_k0"] = g1.weight == h.k0 and not g1.is_zero()
    combo2 = delta_divisible_combination(eis_candidates(F, 3), _kill_thresholds(F, extra=(i1,)))
    report["second_combination_exists"] = combo2 is not None
    combo3 = delta_divisible_combination(
        eis_candidates(F, 4), _kill_thresholds(F, extra=(i1, i2))
    )
    report["third_combination_exists"] = combo3 is not None
    if combo2 is not None and combo3 is not None and g1 is not None:
        g2 = descend_by_delta(combo2)
        g3 = descend_by_delta(combo3)
        triple = [g1.times_form(eisenstein(4, g1.precision), 4), derivative_vector(g2), g3]
        report["independent_triple"] = vector_rank(triple) == 3
    return report


def appendix_demo(exponents, c_values, precision: int = 24) -> dict:
    """Exercise the order-six one-parameter family over the given cusp
    coefficients: constant indicial data, residual of the constant
    function, and the leading-exponent angles."""
    exps = [Fraction(x) for x in exponents]
    if len(exps) != 5 or len(set(exps)) != 5:
        raise PreconditionError("need five pairwise distinct exponents")
    for x in exps:
        if not (0 <= x < 1):
            raise PreconditionError("exponents must lie in [0, 1)")
    expected_angles = [str(a) for a in sorted([Fraction(0)] + exps)]
    cases = []
    indicials = []
    one = QSeries.one(precision)
    for c in c_values:
        c = Fraction(c)
        L = appendix_family(exps, c)
        ind = indicial_polynomial(L)
        indicials.append(ind)
        residual = apply(L, one)
        if c == 0:
            matches = residual.is_zero
        else:
            matches = residual == c * delta(residual.precision)
        angles = [str(a) for a in monodromy_T(solve_fundamental_system(L, 12))]
        cases.append(
            {
                "c": str(c),
                "indicial": [str(a) for a in ind],
                "constant_residual_is_zero": residual.is_zero,
                "residual_equals_c_delta": bool(matches),
                "angles": angles,
                "angles_match": angles == expected_angles,
            }
        )
    return {
        "exponents": [str(x) for x in exps],
        "cases": cases,
        "indicial_identical_across_c": all(ind == indicials[0] for ind in indicials),
        "residual_zero_iff_c_zero": all(
            case["constant_residual_is_zero"] == (case["c"] == "0") for case in cases
        ),
        "all_angles_match": all(case["angles_match"] for case in cases),
    }
