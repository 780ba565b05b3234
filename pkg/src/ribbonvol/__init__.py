"""Exact arithmetic for integral ribbon graphs: weighted counts, their
Laplace-transformed Laurent polynomials, Euclidean and symplectic volume
polynomials, residue-form verification on spectral curves, and the
intersection numbers carried by the volumes.

Everything is computed over the rationals with zero tolerance; numerical
types never enter.
"""

from ._version import __version__
from .crosscheck import (
    CLASSICAL_INTERSECTIONS,
    forward_laplace,
    golden_laplace,
    intersection_ratio_report,
    perimeter_volume,
    series_identity,
    verify_continuous_recursion,
)
from .eo import (
    CURVE_EUCLIDEAN,
    CURVE_LAPLACE,
    CURVE_SYMPLECTIC,
    CURVES,
    SpectralCurveSpec,
    check_kernel_identity,
    residue_sum,
    verify_eo,
)
from .exactmath import (
    EvenLaurentPoly,
    TruncatedSeries,
    divided_difference,
    laurent_to_series,
)
from .lattice import CountTable, census, count, recursion_rhs
from .surface import Splitting, SurfaceType, enumerate_splittings, is_stable
from .transform import (
    CONFIGS,
    EUCLIDEAN,
    LAPLACE,
    SYMPLECTIC,
    RecursionConfig,
    compute,
    euclidean_matches_leading,
    intersection_numbers,
    kontsevich_ratio,
)

__all__ = [
    "__version__",
    "CLASSICAL_INTERSECTIONS",
    "CONFIGS",
    "CountTable",
    "CURVE_EUCLIDEAN",
    "CURVE_LAPLACE",
    "CURVE_SYMPLECTIC",
    "CURVES",
    "EUCLIDEAN",
    "EvenLaurentPoly",
    "LAPLACE",
    "RecursionConfig",
    "SpectralCurveSpec",
    "Splitting",
    "SurfaceType",
    "SYMPLECTIC",
    "TruncatedSeries",
    "census",
    "check_kernel_identity",
    "compute",
    "count",
    "divided_difference",
    "enumerate_splittings",
    "euclidean_matches_leading",
    "forward_laplace",
    "golden_laplace",
    "intersection_numbers",
    "intersection_ratio_report",
    "is_stable",
    "kontsevich_ratio",
    "laurent_to_series",
    "perimeter_volume",
    "recursion_rhs",
    "residue_sum",
    "series_identity",
    "verify_continuous_recursion",
    "verify_eo",
]
