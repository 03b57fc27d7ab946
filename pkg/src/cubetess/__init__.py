"""cubetess: exact-arithmetic toolkit for cube tessellations.

Constructs, certifies, and analyzes decompositions of [0, z]^d into
smaller axis-aligned cubes using exact rational arithmetic throughout.
"""

from .core import (
    Cube,
    DimensionMismatchError,
    Rational,
    Tessellation,
    as_rational,
    cube_volume,
    interiors_overlap,
    normalized,
    scale_tessellation,
)
from .generators import merged_block_grid, perfect_grid, refine, shell_construction
from .search import (
    SearchConfig,
    SearchLimitError,
    SearchOutcome,
    extremal_ratio,
    feasible_counts,
    search_tilings,
)
from .stab import (
    LineSpec,
    NoEpsilonFoundError,
    NonGenericLineError,
    PepsResult,
    PreconditionFailedError,
    StabProfile,
    build_peps,
    check_breakpoint_bounds,
    claim2_check,
    claim3_check,
    claim3_survey,
    mean_identity_check,
    pick_generic_line,
    stab_profile,
)
from .svg import UnsupportedDimensionError, render_svg
from .tessfile import (
    BadHeaderError,
    BadRationalError,
    TessFileError,
    TessSyntaxError,
    parse,
    serialize,
)
from .validation import (
    InvalidInputError,
    StabilityReport,
    StabilityViolationError,
    ValidationReport,
    Violation,
    conclusion_check,
    hypothesis_check,
    int_dth_root,
    stability_oracle,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BadHeaderError",
    "BadRationalError",
    "Cube",
    "DimensionMismatchError",
    "InvalidInputError",
    "LineSpec",
    "NoEpsilonFoundError",
    "NonGenericLineError",
    "PepsResult",
    "PreconditionFailedError",
    "Rational",
    "SearchConfig",
    "SearchLimitError",
    "SearchOutcome",
    "StabProfile",
    "StabilityReport",
    "StabilityViolationError",
    "Tessellation",
    "TessFileError",
    "TessSyntaxError",
    "UnsupportedDimensionError",
    "ValidationReport",
    "Violation",
    "as_rational",
    "build_peps",
    "check_breakpoint_bounds",
    "claim2_check",
    "claim3_check",
    "claim3_survey",
    "conclusion_check",
    "cube_volume",
    "extremal_ratio",
    "feasible_counts",
    "hypothesis_check",
    "int_dth_root",
    "interiors_overlap",
    "mean_identity_check",
    "merged_block_grid",
    "normalized",
    "parse",
    "perfect_grid",
    "pick_generic_line",
    "refine",
    "render_svg",
    "scale_tessellation",
    "search_tilings",
    "serialize",
    "shell_construction",
    "stab_profile",
    "stability_oracle",
    "validate",
]
