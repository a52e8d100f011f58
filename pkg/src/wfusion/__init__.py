"""Exact fusion-rule computations for the charge-6/5 W(2,3) orbifold algebra.

The package determines fusion rules of the orbifold subalgebra by
sandwiching each multiplicity between an upper bound (rank computations
in Zhu-algebra bimodules, driven by explicit singular vectors) and a
lower bound (module multiplicities over a twisted group-set algebra),
all in exact arithmetic over the field Q(sqrt(-3)).
"""

from .scalars import QuadScalar, SQRT_M3, OMEGA, parse_scalar, render_scalar
from .poly import Poly, PolyRing
from .pbw import (
    Mode,
    ModeAlgebra,
    ModuleParams,
    PbwMonomial,
    PbwVector,
    graded_basis,
)
from .exprparse import parse_terms, parse_vector, load_records, load_vectors
from .singular import (
    SingularReport,
    check_singular,
    is_singular,
    singular_space,
    solve_params,
)
from .zhu import (
    EvalContext,
    FusionBounder,
    TruncationError,
    ZhuReducer,
    pair_constraint_polynomial,
    symbolic_context,
)
from .orbifold import (
    FiniteGroup,
    GroupSetAlgebra,
    SimpleModule,
    StableSet,
    group_tensor_bound,
    intertwiner_module,
    lower_bound,
    simple_modules,
)
from .registry import ModuleRegistry, ModuleSpec
from .table import FusionBoundReport, FusionTable, build_table

__all__ = [
    "QuadScalar", "SQRT_M3", "OMEGA", "parse_scalar", "render_scalar",
    "Poly", "PolyRing",
    "Mode", "ModeAlgebra", "ModuleParams", "PbwMonomial", "PbwVector",
    "graded_basis",
    "parse_terms", "parse_vector", "load_records", "load_vectors",
    "SingularReport", "check_singular", "is_singular", "singular_space",
    "solve_params",
    "EvalContext", "FusionBounder", "TruncationError", "ZhuReducer",
    "pair_constraint_polynomial", "symbolic_context",
    "FiniteGroup", "GroupSetAlgebra", "SimpleModule", "StableSet",
    "group_tensor_bound", "intertwiner_module", "lower_bound",
    "simple_modules",
    "ModuleRegistry", "ModuleSpec",
    "FusionBoundReport", "FusionTable", "build_table",
]
