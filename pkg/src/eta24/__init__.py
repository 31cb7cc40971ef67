"""Exact arithmetic for weight-2 level-24 modular forms.

Eta quotients, theta products and Eisenstein series as exact rational
q-expansions; Sturm-bound linear solving in the four character spaces;
closed-form representation numbers of the diagonal quaternary forms with
coefficients in {1, 2, 3, 6}; exhaustive enumeration of the holomorphic
eta quotients of the level.
"""

from .arith import (
    CHARACTER_LABELS,
    EISENSTEIN_CONSTANTS,
    L_series,
    Ld_series,
    eisenstein_series,
    kronecker,
    sigma,
    twisted_sigma,
)
from .errors import (
    AmbiguousSolution,
    BadDivisor,
    Eta24Error,
    FractionalExponent,
    NegativeValuation,
    NonIntegralWeight,
    NonUnitSeries,
    NotInSpace,
    ParseError,
    UnknownForm,
    UnknownPair,
)
from .eta import (
    CUSP_GENERATORS,
    EtaQuotient,
    eta_series,
    format_eta_quotient,
    parse_eta_quotient,
)
from .qseries import QSeries, Rational
from .spaces import (
    SpaceId,
    SolveResult,
    basis_for,
    eisenstein_cusp_split,
    solve_in_basis,
    sturm_bound,
)
from .theta import (
    PRODUCTS_BY_CHARACTER,
    THETA_PRODUCTS,
    phi_series,
    product_character_label,
    theta_product_series,
)

__version__ = "0.1.0"
