"""Kronecker characters, twisted divisor sums and weight-2 Eisenstein series.

The characters chi_t(m) = (t|m) for t in {-24, -8, -4, -3, 1, 8, 12, 24}
drive everything: the divisor sums sigma_{(chi_t1, chi_t2)}(n) are the
q-coefficients of the Eisenstein series E_{t1,t2}, and L_d(q) is the
weight-2 combination L(q) - d L(q^d) of the non-modular L(q) = E_{1,1}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import BadDivisor, UnknownPair
from .qseries import QSeries

CHARACTER_LABELS = (-24, -8, -4, -3, 1, 8, 12, 24)

# (t1, t2) pairs with a defined E_{t1,t2}, and the constant term of each.
EISENSTEIN_CONSTANTS = {
    (-8, -3): Fraction(0),
    (-3, -8): Fraction(0),
    (1, 24): Fraction(0),
    (24, 1): Fraction(-3),
    (1, 1): Fraction(-1, 24),
    (1, 8): Fraction(0),
    (8, 1): Fraction(-1, 2),
    (1, 12): Fraction(0),
    (12, 1): Fraction(-1),
    (-3, -4): Fraction(0),
    (-4, -3): Fraction(0),
}

LD_DIVISORS = (2, 3, 4, 6, 8, 12, 24)


def kronecker(a, n):
    """Kronecker-Jacobi symbol (a|n), defined for all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 8 in (3, 5):
            result = -result
    # n odd and positive: binary Jacobi with quadratic reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _twisted_sigma_int(t1, t2, n):
    return sum(kronecker(t1, m) * kronecker(t2, n // m) * m for m in divisors(n))


def twisted_sigma(t1, t2, n):
    """sum_{m|n} chi_t1(m) chi_t2(n/m) m, and 0 when n is not a positive integer."""
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = int(n)
    if n <= 0:
        return 0
    return _twisted_sigma_int(t1, t2, n)


def sigma(n):
    """Ordinary sum of divisors, extended by 0 off the positive integers."""
    return twisted_sigma(1, 1, n)


def eisenstein_series(t1, t2, prec, dilation=1):
    """E_{t1,t2}(m z) as a q-series: constant C_{t1,t2} plus sigma coefficients at q^(m n)."""
    if (t1, t2) not in EISENSTEIN_CONSTANTS:
        raise UnknownPair(f"no Eisenstein series for pair ({t1}, {t2})")
    if dilation < 1:
        raise ValueError("dilation must be >= 1")
    coeffs = [0] * prec
    coeffs[0] = EISENSTEIN_CONSTANTS[(t1, t2)]
    for n in range(1, (prec - 1) // dilation + 1):
        coeffs[dilation * n] = _twisted_sigma_int(t1, t2, n)
    return QSeries(coeffs)


def L_series(prec):
    """L(q) = -1/24 + sum sigma(n) q^n."""
    return eisenstein_series(1, 1, prec)


def Ld_series(d, prec):
    """L_d(q) = L(q) - d L(q^d): constant (d-1)/24, coefficient sigma(n) - d sigma(n/d)."""
    if d not in LD_DIVISORS:
        raise BadDivisor(f"L_d requires d in {LD_DIVISORS}, got {d}")
    coeffs = [0] * prec
    coeffs[0] = Fraction(d - 1, 24)
    for n in range(1, prec):
        s = _twisted_sigma_int(1, 1, n)
        if n % d == 0:
            s -= d * _twisted_sigma_int(1, 1, n // d)
        coeffs[n] = s
    return QSeries(coeffs)
