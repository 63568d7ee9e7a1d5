"""Exact certification of Calabi-Yau conditions for quantum weighted rings.

The package works over cyclotomic integers throughout: parameters are
roots of unity given by an exponent matrix, certificates come with
explicit witnesses, and every counting routine that admits two
independent computations runs both and compares.
"""

from .cyclo import (
    CongruenceSystem,
    CycInt,
    RootScalar,
    hermite_normal_form,
    image_size,
    kernel_lattice,
    lattice_contains,
    smith_normal_form,
    solve_root_system,
)
from .cycert import (
    Certificate,
    Verdict,
    certify_mixed,
    certify_segre,
    certify_weighted,
    verify_certificate,
)
from .errors import (
    HypothesisViolation,
    InternalDefect,
    ManifestError,
    OrderMismatchError,
)
from .hilbert import (
    HilbertSeries,
    bigraded_series,
    brute_force_dims,
    diagonal,
    quasi_veronese_table,
    quotient_by_regular,
    series_qpoly,
    veronese,
)
from .manifest import Manifest, ManifestAlgebra, load, loads
from .points import (
    INFINITE,
    CensusReport,
    census_weighted_surface,
    chart_simple_count,
    classify_two_var,
    is_special,
    admissible_supports,
    max_stratum_dimension,
    multilinearize,
    pi_degree,
    point_scheme_dim_product,
    two_var_fermat_count,
)
from .qalgebra import (
    AlgebraSpec,
    GradedAut,
    SkewPoly,
    center_lattice,
    chart_parameters,
    fermat,
    is_central,
    is_normal,
    multiply,
    nakayama,
    reorder_scalar,
    second_chart_scalar,
    validate_spec,
)
from .search import (
    REFERENCE_SURFACE_WEIGHTS,
    enumerate_cy_weights,
    search_q_params,
    sweep_census,
    weight_system,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "CensusReport",
    "Certificate",
    "CongruenceSystem",
    "CycInt",
    "GradedAut",
    "HilbertSeries",
    "HypothesisViolation",
    "INFINITE",
    "InternalDefect",
    "Manifest",
    "ManifestAlgebra",
    "ManifestError",
    "OrderMismatchError",
    "REFERENCE_SURFACE_WEIGHTS",
    "RootScalar",
    "SkewPoly",
    "Verdict",
    "admissible_supports",
    "bigraded_series",
    "brute_force_dims",
    "census_weighted_surface",
    "center_lattice",
    "certify_mixed",
    "certify_segre",
    "certify_weighted",
    "chart_parameters",
    "chart_simple_count",
    "classify_two_var",
    "diagonal",
    "enumerate_cy_weights",
    "fermat",
    "hermite_normal_form",
    "image_size",
    "is_central",
    "is_normal",
    "is_special",
    "kernel_lattice",
    "lattice_contains",
    "load",
    "loads",
    "max_stratum_dimension",
    "multilinearize",
    "multiply",
    "nakayama",
    "pi_degree",
    "point_scheme_dim_product",
    "quasi_veronese_table",
    "quotient_by_regular",
    "reorder_scalar",
    "search_q_params",
    "second_chart_scalar",
    "series_qpoly",
    "smith_normal_form",
    "solve_root_system",
    "sweep_census",
    "two_var_fermat_count",
    "validate_spec",
    "veronese",
    "weight_system",
]
