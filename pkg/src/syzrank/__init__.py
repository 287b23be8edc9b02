"""Exact syzygy-rank tests for strong Euler homogeneity of hypersurface points.

The main entry points are :func:`classify` for hypersurfaces in projective
space, :func:`classify_toric` for hypersurfaces in smooth complete toric
varieties, and :func:`global_seh_check` for a whole projective hypersurface.
All arithmetic is exact, over the rationals or a prime field.
"""

__version__ = "0.1.0"

from .errors import InconsistencyError, InvalidPointError, NonIsolatedError, NotOnHypersurfaceError
from .fields import DEFAULT_PRIME, GF, QQ
from .groebner import (
    INFINITE,
    buchberger,
    ideal_membership,
    normal_form,
    quotient_dimension,
    radical_membership,
    standard_basis,
)
from .incidence import discrepancy_sum, global_seh_check, zf_ideal
from .local import germ_invariants, invariants_at, milnor, tjurina, truncation_oracle
from .orders import GREVLEX, LEX, NEG_GREVLEX
from .parsing import ParseError, parse_point, parse_polynomial, serialize_polynomial
from .polynomial import Point, Polynomial, Ring, Vector
from .projective import (
    PointReport,
    PointStatus,
    ProjectiveHypersurface,
    affine_log_rank_oracle,
    build_matrices,
    classify,
    classify_isolated,
    point_status,
    reducedness_warning,
)
from .singular_points import find_rational_singular_points
from .syzygy import first_syzygies, syzygy_oracle_with_default_cap
from .toric import (
    Fan,
    ToricHypersurface,
    ToricPointReport,
    builtin_fan,
    classify_toric,
    logarithmic_defect,
    toric_chart_oracle,
    validate_fan,
)

__all__ = [
    "__version__",
    "InconsistencyError",
    "InvalidPointError",
    "NonIsolatedError",
    "NotOnHypersurfaceError",
    "DEFAULT_PRIME",
    "GF",
    "QQ",
    "INFINITE",
    "buchberger",
    "ideal_membership",
    "normal_form",
    "quotient_dimension",
    "radical_membership",
    "standard_basis",
    "discrepancy_sum",
    "global_seh_check",
    "zf_ideal",
    "germ_invariants",
    "invariants_at",
    "milnor",
    "tjurina",
    "truncation_oracle",
    "GREVLEX",
    "LEX",
    "NEG_GREVLEX",
    "ParseError",
    "parse_point",
    "parse_polynomial",
    "serialize_polynomial",
    "Point",
    "Polynomial",
    "Ring",
    "Vector",
    "PointReport",
    "PointStatus",
    "ProjectiveHypersurface",
    "affine_log_rank_oracle",
    "build_matrices",
    "classify",
    "classify_isolated",
    "point_status",
    "reducedness_warning",
    "find_rational_singular_points",
    "first_syzygies",
    "syzygy_oracle_with_default_cap",
    "Fan",
    "ToricHypersurface",
    "ToricPointReport",
    "builtin_fan",
    "classify_toric",
    "logarithmic_defect",
    "toric_chart_oracle",
    "validate_fan",
]
