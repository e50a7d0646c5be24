"""Exact generalized bi-periodic Fibonacci quaternions and octonions."""

from .exact import (
    QuadraticContext,
    QuadraticElement,
    QuadraticError,
    Rational,
    format_rational,
    parse_rational,
    quad_conj,
    quad_inv,
    quad_mul,
)
from .hypercomplex import (
    OCTONION_TABLE,
    QUATERNION_TABLE,
    MultiplicationTable,
    Octonion,
    Quaternion,
    hc_add,
    hc_conj,
    hc_mul,
    hc_norm,
    hc_scale,
)
from .hyperseq import (
    OW,
    W,
    OW_binet,
    StarConstants,
    W_binet,
    classical_binet,
    classical_binet_check,
    oct_star_constants,
    star_constants,
)
from .identities import (
    IdentityReport,
    QuatMatrix2,
    cassini_even,
    cassini_quat,
    catalan_oct,
    catalan_quat,
    matrix_rep,
    mixed_relation_oct,
    mixed_relation_quat,
    norm_formula,
    sums_oct,
    sums_quat,
)
from .scalar import (
    ParamError,
    Params,
    SequenceEngine,
    binet_constants,
    lucas_params,
    roots,
    w,
    w_binet,
    zeta,
)
from .series import (
    Polynomial,
    PowerSeries,
    RationalFunction,
    correction_term,
    f_series,
    genfunc_oct,
    genfunc_quat,
    series_expand,
)

__version__ = "0.1.0"

__all__ = [
    "QuadraticContext",
    "QuadraticElement",
    "QuadraticError",
    "Rational",
    "format_rational",
    "parse_rational",
    "quad_conj",
    "quad_inv",
    "quad_mul",
    "OCTONION_TABLE",
    "QUATERNION_TABLE",
    "MultiplicationTable",
    "Octonion",
    "Quaternion",
    "hc_add",
    "hc_conj",
    "hc_mul",
    "hc_norm",
    "hc_scale",
    "OW",
    "W",
    "OW_binet",
    "StarConstants",
    "W_binet",
    "classical_binet",
    "classical_binet_check",
    "oct_star_constants",
    "star_constants",
    "IdentityReport",
    "QuatMatrix2",
    "cassini_even",
    "cassini_quat",
    "catalan_oct",
    "catalan_quat",
    "matrix_rep",
    "mixed_relation_oct",
    "mixed_relation_quat",
    "norm_formula",
    "sums_oct",
    "sums_quat",
    "ParamError",
    "Params",
    "SequenceEngine",
    "binet_constants",
    "lucas_params",
    "roots",
    "w",
    "w_binet",
    "zeta",
    "Polynomial",
    "PowerSeries",
    "RationalFunction",
    "correction_term",
    "f_series",
    "genfunc_oct",
    "genfunc_quat",
    "series_expand",
]
