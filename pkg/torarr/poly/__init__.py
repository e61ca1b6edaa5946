"""Exact polynomial arithmetic and Groebner bases."""

from torarr.poly.univariate import UniPolyZ
from torarr.poly.bivariate import BivariatePolyZ, tutte_to_poincare
from torarr.poly.multivariate import MultiPolyQ, grevlex_key, lex_key
from torarr.poly.groebner import GroebnerBasis, IdealQ, buchberger, contains_point, normal_form
from torarr.poly.hilbert import hilbert_function, hilbert_numerator, projective_dim_degree

__all__ = [
    "UniPolyZ",
    "BivariatePolyZ",
    "tutte_to_poincare",
    "MultiPolyQ",
    "grevlex_key",
    "lex_key",
    "IdealQ",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "contains_point",
    "hilbert_function",
    "hilbert_numerator",
    "projective_dim_degree",
]
