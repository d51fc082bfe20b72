"""Exact arithmetic for monic modular differential equations and
vector-valued modular forms on the full modular group."""

from ._kernel import BACKEND
from .classify import (
    HpSeries,
    MultiplierSpec,
    RationalAngle,
    RepInput,
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
from .deriv import (
    VvmfVector,
    derivative_vector,
    dkn_constants,
    iterate_derivative,
    modular_derivative,
)
from .errors import (
    CongruentRootsError,
    DivisibilityError,
    FactorizationError,
    InternalCheckError,
    ParityUnsolvableError,
    PrecisionError,
    PreconditionError,
    ReducibilityBoundaryError,
    TDeterminedRequiredError,
    UnsupportedInputError,
    VvmfError,
)
from .forms import GradedFormBasis, delta, eisenstein, eta_power, mspace_basis
from .frobenius import monodromy_T, solve_fundamental_system, theta_form
from .mmde import EisensteinOperator, Mmde, appendix_family, apply, indicial_polynomial, unique_operator
from .modstruct import (
    appendix_demo,
    d_iterate_generators,
    delta_divisible_combination,
    descend_by_delta,
    dim4_structure,
    dim5_structure,
    eis_candidates,
    module_products,
    vector_rank,
    weight_space_dimension,
)
from .qseries import QSeries, Rat, add, divide_exact, make_series, mul, q_derivative
from .wronskian import modular_wronskian, weight_lower_bound, wronskian_factorization

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CongruentRootsError",
    "DivisibilityError",
    "EisensteinOperator",
    "FactorizationError",
    "GradedFormBasis",
    "HpSeries",
    "InternalCheckError",
    "Mmde",
    "MultiplierSpec",
    "ParityUnsolvableError",
    "PrecisionError",
    "PreconditionError",
    "QSeries",
    "Rat",
    "RationalAngle",
    "ReducibilityBoundaryError",
    "RepInput",
    "TDeterminedRequiredError",
    "UnsupportedInputError",
    "VvmfError",
    "VvmfVector",
    "add",
    "appendix_demo",
    "appendix_family",
    "apply",
    "classify_dim1",
    "classify_dim2",
    "classify_dim3",
    "classify_dim4",
    "classify_dim5",
    "d_iterate_generators",
    "delta",
    "delta_divisible_combination",
    "derivative_vector",
    "descend_by_delta",
    "dim4_parity",
    "dim4_structure",
    "dim5_data",
    "dim5_structure",
    "divide_exact",
    "dkn_constants",
    "eis_candidates",
    "eisenstein",
    "eta_power",
    "hp_dimension",
    "indicial_polynomial",
    "iterate_derivative",
    "make_series",
    "minimal_admissible_set",
    "modular_derivative",
    "modular_wronskian",
    "module_products",
    "monodromy_T",
    "mspace_basis",
    "mul",
    "multiplier_values",
    "q_derivative",
    "solve_fundamental_system",
    "t_determined_heuristic",
    "theta_form",
    "unique_operator",
    "vector_rank",
    "weight_lower_bound",
    "weight_space_dimension",
    "wronskian_factorization",
]
