"""Exact series identities tying theta products to the cusp generators.

Five integer combinations of theta products collapse onto scalar multiples
of the cusp generators, and the squares-generating function phi has an eta
quotient expression; both facts are re-verifiable to any precision.
"""

from __future__ import annotations

from .eta import CUSP_GENERATORS, PHI_AS_ETA_QUOTIENT
from .qseries import QSeries
from .theta import phi_series, theta_product_series

# (name, [(coefficient, quadruple), ...], (scalar, cusp generator))
CUSP_COMBINATION_IDENTITIES = (
    (
        "4*A(q)",
        ((-1, (1, 1, 2, 2)), (4, (1, 2, 3, 6)), (-3, (3, 3, 6, 6))),
        (4, "A"),
    ),
    (
        "8*B_1(q)",
        ((-2, (1, 1, 1, 2)), (5, (1, 1, 3, 6)), (9, (3, 3, 3, 6)), (-12, (3, 6, 6, 6))),
        (8, "B1"),
    ),
    (
        "4*B_2(q)",
        ((2, (1, 2, 2, 2)), (-5, (2, 2, 3, 6)), (-6, (3, 3, 3, 6)), (9, (3, 6, 6, 6))),
        (4, "B2"),
    ),
    (
        "24*C_1(q)",
        ((2, (1, 1, 1, 6)), (-3, (1, 1, 2, 3)), (4, (2, 2, 2, 3)), (-3, (2, 3, 3, 3))),
        (24, "C1"),
    ),
    (
        "4*C_2(q)",
        ((2, (1, 1, 2, 3)), (-2, (1, 2, 2, 6)), (-3, (2, 2, 2, 3)), (3, (2, 3, 6, 6))),
        (4, "C2"),
    ),
)


def check_cusp_combination(identity, prec):
    """Return (name, lhs series, rhs series) for one combination identity."""
    name, terms, (scalar, generator) = identity
    lhs = QSeries.zero(prec)
    for coeff, quad in terms:
        lhs = lhs + theta_product_series(quad, prec).scale(coeff)
    rhs = CUSP_GENERATORS[generator].series(prec).scale(scalar)
    return name, lhs, rhs


def check_phi_eta(prec):
    """phi(z) against its eta quotient expression, both to O(q^prec)."""
    return phi_series(1, prec), PHI_AS_ETA_QUOTIENT.series(prec)


def first_mismatch(lhs, rhs):
    """Index of the first differing coefficient, or None."""
    for n in range(min(lhs.prec, rhs.prec)):
        if lhs.coefficient(n) != rhs.coefficient(n):
            return n
    return None
