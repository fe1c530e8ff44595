"""Exact computer algebra for Hasse-Schmidt derivations on exterior algebras."""
from .arith import (E, H, X, Alphabet, LaurentSeries, MultiPoly, ParseError, PowerSeries,
                    inverse_laplace, laplace, laurent_mul, laurent_scale, parse_laurent,
                    parse_poly, series_exp, series_inverse, series_log, series_mul, symbols)
from .cayley_hamilton import (CharPoly, brooks_coefficients, ch_operator_apply,
                              char_poly_via_top_form, exp_ft, standard_basis, u_basis,
                              verify_ch_theorem)
from .exterior import Multivector, contract, wedge
from .hs import (HSDerivation, apply_bar, apply_coeff, apply_series, check_integration_by_parts,
                 compose, hs_from_endomorphism, hs_inverse, invert_series)
from .matrices import Matrix, parse_matrix
from .symmetric import Partition, h_from_e, h_from_x, project_rank, schur_jacobi_trudi, x_from_h
from .vertex import (convergence_check, gamma_diffop_oracle, gamma_r, gamma_star_r,
                     giambelli_verify, module_action, sigma_minus_on_schur, wedge_from_partition)

__version__ = "0.1.0"

__all__ = [
    "E", "H", "X", "Alphabet", "LaurentSeries", "MultiPoly", "ParseError", "PowerSeries",
    "inverse_laplace", "laplace", "laurent_mul", "laurent_scale", "parse_laurent", "parse_poly",
    "series_exp", "series_inverse", "series_log", "series_mul", "symbols",
    "CharPoly", "brooks_coefficients", "ch_operator_apply", "char_poly_via_top_form", "exp_ft",
    "standard_basis", "u_basis", "verify_ch_theorem",
    "Multivector", "contract", "wedge",
    "HSDerivation", "apply_bar", "apply_coeff", "apply_series", "check_integration_by_parts",
    "compose", "hs_from_endomorphism", "hs_inverse", "invert_series",
    "Matrix", "parse_matrix",
    "Partition", "h_from_e", "h_from_x", "project_rank", "schur_jacobi_trudi", "x_from_h",
    "convergence_check", "gamma_diffop_oracle", "gamma_r", "gamma_star_r", "giambelli_verify",
    "module_action", "sigma_minus_on_schur", "wedge_from_partition",
]
