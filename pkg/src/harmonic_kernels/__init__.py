"""Exact-arithmetic engine for spherical, complex and symplectic harmonic
kernels, with a verification CLI built on exact rational polynomial equality."""

from .errors import (
    CapExceeded,
    EngineError,
    HomogeneityError,
    InvalidParamsError,
    KindMismatchError,
    ParseError,
    SystemMismatchError,
    UnknownSymbolError,
    ZeroDimensionalError,
)
from .grammar import format_polynomial, parse_polynomial
from .params import KernelParams, complex_params, real_params, symplectic_params
from .poly import (
    EVERY_DEGREE,
    INHOMOGENEOUS,
    SparsePolynomial,
    combine,
    conjugate,
    degree_profile,
    partial,
    power,
    restrict_zero,
)
from .scalars import ExactScalar
from .variables import VariableSystem

__version__ = "0.1.0"


def __getattr__(name):
    # convenience access to the heavier layers without eager imports
    if name in ("kernel", "random_poly", "decompose", "proj_harmonic_real",
                "proj_harmonic_complex", "proj_symplectic", "BilinearAtoms"):
        from . import harmonics
        return getattr(harmonics, name)
    if name in ("plane_wave", "verify_planewave", "stiefel1_mean",
                "stiefel2_mean", "StiefelContext", "Caps"):
        from . import pizzetti
        return getattr(pizzetti, name)
    if name in ("run_suites", "run_identities", "RunConfig", "GridConfig"):
        from . import verify
        return getattr(verify, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "CapExceeded",
    "EngineError",
    "EVERY_DEGREE",
    "ExactScalar",
    "HomogeneityError",
    "INHOMOGENEOUS",
    "InvalidParamsError",
    "KernelParams",
    "KindMismatchError",
    "ParseError",
    "SparsePolynomial",
    "SystemMismatchError",
    "UnknownSymbolError",
    "VariableSystem",
    "ZeroDimensionalError",
    "combine",
    "complex_params",
    "conjugate",
    "degree_profile",
    "format_polynomial",
    "parse_polynomial",
    "partial",
    "power",
    "real_params",
    "restrict_zero",
    "symplectic_params",
    "__version__",
]
