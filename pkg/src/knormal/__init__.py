"""Exact counting of k-normal elements in finite fields and the mean value
of their densities."""

from .fqpoly import Factorization, Poly, factor_xn_minus_1, mu_q, ord_poly, parse_poly, phi_q
from .gf import ExtField, FieldSpec, make_base_field, make_extension, make_field
from .meanvalue import decompose, density_series
from .spectrum import Spectrum, count_k_normal, full_spectrum, oracle_spectrum

__version__ = "0.1.0"

__all__ = [
    "ExtField",
    "Factorization",
    "FieldSpec",
    "Poly",
    "Spectrum",
    "count_k_normal",
    "decompose",
    "density_series",
    "factor_xn_minus_1",
    "full_spectrum",
    "make_base_field",
    "make_extension",
    "make_field",
    "mu_q",
    "oracle_spectrum",
    "ord_poly",
    "parse_poly",
    "phi_q",
]
