"""Exact computations with spherical stable varieties.

Integers are Python ints, rationals are fractions.Fraction, and complexes
travel as JSON document text (the format read by ssvtool).
"""

from ._core import (
    Error,
    ParamError,
    ParseError,
    SearchBudgetError,
    ValidationError,
    __version__,
    cohomology,
    dominant_hull,
    hilbert_basis,
    is_matroid_polytope,
    matroid_subdivisions,
    run,
    saturation_witness,
    section_dimension,
    sl2_catalog,
    smith_diagonal,
    validate,
    weight_set,
    weyl_dimension,
)

__all__ = [
    "Error",
    "ParamError",
    "ParseError",
    "SearchBudgetError",
    "ValidationError",
    "__version__",
    "cohomology",
    "dominant_hull",
    "hilbert_basis",
    "is_matroid_polytope",
    "matroid_subdivisions",
    "run",
    "saturation_witness",
    "section_dimension",
    "sl2_catalog",
    "smith_diagonal",
    "validate",
    "weight_set",
    "weyl_dimension",
]
