"""Corner structure of monomial ideals.

Maximal corners via pivot-splitting trees, multigraded Betti bounds,
irredundant irreducible decompositions, and Stanley decompositions with
their Hilbert series. A brute-force oracle double-checks the fast paths.
"""

from ._kernel import available_backends, default_backend
from .decompositions import (
    HilbertSeries,
    StanleyCone,
    StanleyDecomposition,
    hilbert_series,
    irreducible_decomposition,
    krull_dimension,
    stanley_artinian,
    stanley_general,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    FeasibilityError,
    IdealSyntaxError,
    MvdecompError,
    ScaleError,
)
from .ideal_io import (
    IdealDocument,
    default_variable_names,
    format_ideal,
    format_monomial,
    parse_ideal,
)
from .monomials import (
    MonomialIdeal,
    Multidegree,
    artinian_closure,
    contains,
    divides,
    lcm_exponents,
    lcm_of,
    lowered,
    minimalize,
    support_of,
    total_degree,
)
from .mvt import (
    BettiBounds,
    MvtNode,
    MvtTree,
    PivotStrategy,
    betti_bounds,
    build_mvt,
    maximal_corners,
    mvt_children,
)
from .oracle import (
    VerificationResult,
    koszul_homology_bruteforce,
    koszul_homology_profile_bruteforce,
    lcm_lattice,
    maximal_standard_monomials_box,
    standard_monomial_count,
    verify_irreducible,
    verify_stanley,
)
from .randomgen import BenchSpec, random_ideal
from .simplicial import (
    HomologyProfile,
    SimplicialComplex,
    globally_free_directions,
    is_closed_corner,
    is_maximal_corner,
    koszul_homology_dim,
    koszul_homology_profile,
    locally_free_directions,
    lower_complex,
    reduced_homology,
    upper_complex,
)

__version__ = "0.1.0"

__all__ = [
    "BenchSpec",
    "BettiBounds",
    "DimensionMismatchError",
    "DomainError",
    "FeasibilityError",
    "HilbertSeries",
    "HomologyProfile",
    "IdealDocument",
    "IdealSyntaxError",
    "MonomialIdeal",
    "Multidegree",
    "MvdecompError",
    "MvtNode",
    "MvtTree",
    "PivotStrategy",
    "ScaleError",
    "SimplicialComplex",
    "StanleyCone",
    "StanleyDecomposition",
    "VerificationResult",
    "artinian_closure",
    "available_backends",
    "betti_bounds",
    "build_mvt",
    "contains",
    "default_backend",
    "default_variable_names",
    "divides",
    "format_ideal",
    "format_monomial",
    "globally_free_directions",
    "hilbert_series",
    "irreducible_decomposition",
    "is_closed_corner",
    "is_maximal_corner",
    "koszul_homology_bruteforce",
    "koszul_homology_dim",
    "koszul_homology_profile",
    "koszul_homology_profile_bruteforce",
    "krull_dimension",
    "lcm_exponents",
    "lcm_lattice",
    "lcm_of",
    "locally_free_directions",
    "lower_complex",
    "lowered",
    "maximal_corners",
    "maximal_standard_monomials_box",
    "minimalize",
    "mvt_children",
    "parse_ideal",
    "random_ideal",
    "reduced_homology",
    "stanley_artinian",
    "stanley_general",
    "standard_monomial_count",
    "support_of",
    "total_degree",
    "upper_complex",
    "verify_irreducible",
    "verify_stanley",
]
