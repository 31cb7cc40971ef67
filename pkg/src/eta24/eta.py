"""Dedekind eta expansions, eta quotients and their admissibility data.

An eta quotient of level N is prod_{delta | N} eta(delta z)^(r_delta).  Its
q-expansion is q^e times a product of integral series, where
e = sum(delta r_delta) / 24; a rational q-expansion exists only when e is a
non-negative integer.  Holomorphy on the modular curve is decided by the
order of vanishing at each cusp 1/c (c | N), computed by the classical
formula

    ord(1/c) = (N/24) * sum_delta gcd(c, delta)^2 r_delta / (gcd(c, N/c) c delta)

with cusp width N / (c gcd(c, N/c)) and phi(gcd(c, N/c)) cusps sharing the
denominator c.  The multiplier character is the Kronecker character of
(-1)^k prod delta^(r_delta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import divisors, kronecker
from .errors import (
    FractionalExponent,
    NegativeValuation,
    NonIntegralWeight,
    ParseError,
)
from .qseries import QSeries


@lru_cache(maxsize=None)
def eta_series(delta, prec):
    """Integral part of eta(delta z): prod_{n>=1} (1 - q^(delta n)) to O(q^prec).

    Expanded sparsely via generalized pentagonal numbers
    (exponents k(3k-1)/2 and k(3k+1)/2 with sign (-1)^k).
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    coeffs = [0] * prec
    coeffs[0] = 1
    k = 1
    while True:
        p1 = delta * k * (3 * k - 1) // 2
        p2 = delta * k * (3 * k + 1) // 2
        if p1 >= prec and p2 >= prec:
            break
        s = -1 if k % 2 else 1
        if p1 < prec:
            coeffs[p1] = s
        if p2 < prec:
            coeffs[p2] = s
        k += 1
    return QSeries(coeffs)


@lru_cache(maxsize=None)
def _eta_power(delta, r, prec):
    # incremental power cache: the enumeration expands thousands of
    # quotients sharing the same eta powers
    if r == 0:
        return QSeries.one(prec)
    if r == 1:
        return eta_series(delta, prec)
    if r == -1:
        return eta_series(delta, prec).invert()
    step = 1 if r > 0 else -1
    return _eta_power(delta, r - step, prec) * _eta_power(delta, step, prec)


def squarefree_kernel(n):
    """Largest squarefree divisor of |n|, with the sign of n preserved."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    kernel = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                kernel *= p
        p += 1 if p == 2 else 2
    return sign * kernel * n


def fundamental_discriminant(n):
    """Fundamental discriminant with the same squarefree kernel as n."""
    k = squarefree_kernel(n)
    return k if k % 4 == 1 else 4 * k


@dataclass(frozen=True)
class CuspOrderReport:
    """Orders and widths of an eta quotient at the cusps 1/c, c | N."""

    level: int
    orders: tuple  # (c, order, width, multiplicity) per divisor c of N
    weight: Fraction

    def order_at(self, c):
        for cc, order, _, _ in self.orders:
            if cc == c:
                return order
        raise KeyError(f"{c} is not a cusp denominator for level {self.level}")

    def width_at(self, c):
        for cc, _, width, _ in self.orders:
            if cc == c:
                return width
        raise KeyError(f"{c} is not a cusp denominator for level {self.level}")

    def min_order(self):
        return min(order for _, order, _, _ in self.orders)

    def weighted_sum(self):
        """Sum of order * multiplicity over cusps; equals k*[SL2(Z):Gamma0(N)]/12."""
        return sum(order * mult for _, order, _, mult in self.orders)


def group_index(level):
    """[SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p)."""
    index = Fraction(level)
    n, p = level, 2
    while p * p <= n:
        if n % p == 0:
            index *= Fraction(p + 1, p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        index *= Fraction(n + 1, n)
    assert index.denominator == 1
    return int(index)


def _euler_phi(n):
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


class EtaQuotient:
    """Exponent map delta -> r_delta over the divisors of the level."""

    __slots__ = ("_level", "_exponents")

    def __init__(self, exponents, level=24):
        items = []
        for delta, r in sorted(exponents.items()):
            if level % delta != 0 or delta < 1:
                raise ValueError(f"{delta} does not divide the level {level}")
            if r != 0:
                items.append((int(delta), int(r)))
        self._level = level
        self._exponents = tuple(items)

    @property
    def level(self):
        return self._level

    @property
    def exponents(self):
        return dict(self._exponents)

    def exponent(self, delta):
        for d, r in self._exponents:
            if d == delta:
                return r
        return 0

    def exponent_vector(self):
        """Exponents in divisor order, absent divisors as 0."""
        return tuple(self.exponent(d) for d in divisors(self._level))

    def __eq__(self, other):
        return (
            isinstance(other, EtaQuotient)
            and self._level == other._level
            and self._exponents == other._exponents
        )

    def __hash__(self):
        return hash((self._level, self._exponents))

    def __repr__(self):
        return f"EtaQuotient({dict(self._exponents)!r}, level={self._level})"

    @property
    def weight(self):
        return Fraction(sum(r for _, r in self._exponents), 2)

    def prefactor_exponent(self):
        """Exponent e of the q-prefactor: sum(delta r_delta) / 24."""
        return Fraction(sum(d * r for d, r in self._exponents), 24)

    def character_discriminant(self):
        """Fundamental discriminant attached to (-1)^k prod delta^(r_delta).

        Square factors never change the character, so the value is reduced
        through the squarefree kernel; for the weight-2 level-24 quotients it
        lands in {1, 8, 12, 24}, matching the chi_t labelling.
        """
        k = self.weight
        if k.denominator != 1:
            raise NonIntegralWeight(f"weight {k} is not an integer")
        value = Fraction(1)
        for d, r in self._exponents:
            value *= Fraction(d) ** r
        n = value.numerator * value.denominator
        if int(k) % 2:
            n = -n
        return fundamental_discriminant(n)

    def character_label(self):
        """The label t with induced character chi_t, or None outside {1, 8, 12, 24}."""
        d = self.character_discriminant()
        return d if d in (1, 8, 12, 24) else None

    def cusp_orders(self):
        N = self._level
        k = self.weight
        entries = []
        for c in divisors(N):
            g = gcd(c, N // c)
            order = Fraction(N, 24 * g * c) * sum(
                Fraction(gcd(c, d) ** 2 * r, d) for d, r in self._exponents
            )
            width = N // (c * g)
            entries.append((c, order, width, _euler_phi(g)))
        return CuspOrderReport(level=N, orders=tuple(entries), weight=k)

    def is_holomorphic_modular_form(self):
        """All cusp orders >= 0.  Requires integral weight."""
        if self.weight.denominator != 1:
            raise NonIntegralWeight(f"weight {self.weight} is not an integer")
        return self.cusp_orders().min_order() >= 0

    def satisfies_transformation_congruences(self):
        """sum(delta r) and sum((N/delta) r) both divisible by 24.

        Together with non-negative cusp orders and integral weight these are
        the classical sufficient conditions for membership in
        M_k(Gamma0(N), chi).
        """
        N = self._level
        s1 = sum(d * r for d, r in self._exponents)
        s2 = sum((N // d) * r for d, r in self._exponents)
        return s1 % 24 == 0 and s2 % 24 == 0

    def series(self, prec):
        """Exact q-expansion q^e prod eta(delta z)^(r_delta) to O(q^prec)."""
        e = self.prefactor_exponent()
        if e.denominator != 1:
            raise FractionalExponent(
                f"prefactor exponent {e} is not an integer; no expansion in Q[[q]]"
            )
        e = int(e)
        if e < 0:
            raise NegativeValuation(f"prefactor exponent {e} is negative")
        product = QSeries.one(prec)
        for d, r in self._exponents:
            product = product * _eta_power(d, r, prec)
        return product.shift(e)


def eta_quotient_series(f, prec):
    return f.series(prec)


def parse_eta_quotient(text, level=24):
    """Parse the "delta:r" comma-separated exponent format, e.g. "2:1,4:1,6:1,12:1"."""
    exponents = {}
    position = 0
    for chunk in text.split(","):
        pair = chunk.strip()
        if pair.count(":") != 1:
            raise ParseError(f"expected 'delta:r', got {pair!r}", position)
        d_text, r_text = pair.split(":")
        try:
            d, r = int(d_text), int(r_text)
        except ValueError:
            raise ParseError(f"non-integer entry in {pair!r}", position) from None
        if d < 1 or level % d != 0:
            raise ParseError(f"{d} does not divide the level {level}", position)
        if d in exponents:
            raise ParseError(f"repeated divisor {d}", position)
        exponents[d] = r
        position += len(chunk) + 1
    return EtaQuotient(exponents, level=level)


def format_eta_quotient(f):
    return ",".join(f"{d}:{r}" for d, r in sorted(f.exponents.items()))


# The five distinguished cusp forms spanning the cuspidal subspaces:
# A spans S_2(Gamma0(24)); B1, B2 span S_2(Gamma0(24), chi_8);
# C1, C2 span S_2(Gamma0(24), chi_24).
CUSP_GENERATORS = {
    "A": EtaQuotient({2: 1, 4: 1, 6: 1, 12: 1}),
    "B1": EtaQuotient({1: 1, 2: -1, 3: -1, 6: 4, 8: 2, 12: -1}),
    "B2": EtaQuotient({1: 2, 4: -1, 6: -1, 8: 1, 12: 4, 24: -1}),
    "C1": EtaQuotient({1: 1, 2: -1, 3: -1, 4: 1, 6: 4, 12: -2, 24: 2}),
    "C2": EtaQuotient({1: 2, 2: -2, 4: 4, 6: 1, 8: -1, 12: -1, 24: 1}),
}

# eta^5(2z) / (eta^2(z) eta^2(4z)), an eta-quotient expression for the
# squares-generating theta function phi(z)
PHI_AS_ETA_QUOTIENT = EtaQuotient({1: -2, 2: 5, 4: -2})
