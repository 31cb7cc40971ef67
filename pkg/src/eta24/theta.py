"""Squares-generating theta function phi and four-factor theta products.

phi(z) = sum_{n in Z} q^(n^2), and
phi[a1,a2,a3,a4](z) = phi(a1 z) phi(a2 z) phi(a3 z) phi(a4 z)
                    = sum_n N(a1,a2,a3,a4; n) q^n,
the generating function of the representation numbers of the diagonal
quaternary form a1 x1^2 + ... + a4 x4^2.  The 35 order-insensitive
quadruples over {1,2,3,6} split into four groups by the character of the
space of weight-2 level-24 forms containing the product: the character
label is determined by the squarefree kernel of a1 a2 a3 a4
(1 -> chi_1, 2 -> chi_8, 3 -> chi_12, 6 -> chi_24).
"""

from __future__ import annotations

from functools import lru_cache, reduce

from .eta import squarefree_kernel
from .qseries import QSeries

_KERNEL_TO_LABEL = {1: 1, 2: 8, 3: 12, 6: 24}


@lru_cache(maxsize=None)
def phi_series(a, prec):
    """phi(a z): constant 1 and coefficient 2 at the exponents a n^2."""
    if a < 1:
        raise ValueError("a must be >= 1")
    coeffs = [0] * prec
    coeffs[0] = 1
    n = 1
    while a * n * n < prec:
        coeffs[a * n * n] = 2
        n += 1
    return QSeries(coeffs)


def theta_product_series(quad, prec):
    """Product of the four dilated phi series at shared precision."""
    return reduce(lambda s, a: s * phi_series(a, prec), quad, QSeries.one(prec))


def product_character_label(quad):
    """Label t of the space M_2(Gamma0(24), chi_t) containing phi[quad]."""
    a1, a2, a3, a4 = quad
    return _KERNEL_TO_LABEL[squarefree_kernel(a1 * a2 * a3 * a4)]


def normalize_quadruple(quad):
    return tuple(sorted(quad))


def _all_products():
    seen = set()
    for a1 in (1, 2, 3, 6):
        for a2 in (1, 2, 3, 6):
            for a3 in (1, 2, 3, 6):
                for a4 in (1, 2, 3, 6):
                    seen.add(tuple(sorted((a1, a2, a3, a4))))
    return tuple(sorted(seen))


# All 35 quadruples over {1,2,3,6} up to order, grouped by character label.
THETA_PRODUCTS = _all_products()
PRODUCTS_BY_CHARACTER = {
    t: tuple(q for q in THETA_PRODUCTS if product_character_label(q) == t)
    for t in (1, 8, 12, 24)
}
