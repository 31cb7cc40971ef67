"""Truncated power series in q with exact rational coefficients.

A series of precision P stores coefficients of q^0 .. q^(P-1) and stands
for the expansion f + O(q^P).  Every binary operation truncates to the
smaller operand precision, so no coefficient is ever reported that was not
fully determined by the inputs.  Coefficients are Python ints or
fractions.Fraction values; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitSeries

Rational = Fraction


def _normalize(c):
    # keep integers as plain ints: cheaper arithmetic, identical semantics
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class QSeries:
    """Immutable truncated q-expansion with exact coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = tuple(_normalize(c) for c in coeffs)
        if not self._coeffs:
            raise ValueError("a series needs precision at least 1")

    @classmethod
    def zero(cls, prec):
        return cls([0] * prec)

    @classmethod
    def one(cls, prec):
        return cls([1] + [0] * (prec - 1))

    @classmethod
    def from_terms(cls, terms, prec):
        """Build from a sparse {exponent: coefficient} mapping."""
        coeffs = [0] * prec
        for n, c in terms.items():
            if 0 <= n < prec:
                coeffs[n] = c
        return cls(coeffs)

    @property
    def prec(self):
        return len(self._coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    def coefficient(self, n):
        if not 0 <= n < self.prec:
            raise IndexError(f"coefficient of q^{n} unknown at precision {self.prec}")
        return self._coeffs[n]

    def truncate(self, prec):
        if prec > self.prec:
            raise ValueError(f"cannot extend precision {self.prec} to {prec}")
        return QSeries(self._coeffs[:prec])

    def is_zero(self):
        return all(c == 0 for c in self._coeffs)

    def __eq__(self, other):
        """Equality of all coefficients up to the shared precision."""
        if not isinstance(other, QSeries):
            return NotImplemented
        p = min(self.prec, other.prec)
        return self._coeffs[:p] == other._coeffs[:p]

    __hash__ = None

    def __add__(self, other):
        p = min(self.prec, other.prec)
        return QSeries([a + b for a, b in zip(self._coeffs, other._coeffs)][:p])

    def __sub__(self, other):
        p = min(self.prec, other.prec)
        return QSeries([a - b for a, b in zip(self._coeffs, other._coeffs)][:p])

    def __neg__(self):
        return QSeries([-a for a in self._coeffs])

    def scale(self, c):
        c = _normalize(c)
        return QSeries([c * a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        p = min(self.prec, other.prec)
        a, b = self._coeffs, other._coeffs
        out = [0] * p
        for i in range(p):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(p - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return QSeries(out)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; requires a nonzero constant term.

        Uses the standard recurrence b_n = -(sum_{k=1..n} a_k b_{n-k}) / a_0.
        """
        a = self._coeffs
        if a[0] == 0:
            raise NonUnitSeries("cannot invert a series with zero constant term")
        p = self.prec
        a0 = a[0]
        inv0 = None if a0 == 1 else Fraction(1) / a0
        b = [0] * p
        b[0] = 1 if inv0 is None else inv0
        for n in range(1, p):
            s = 0
            for k in range(1, n + 1):
                ak = a[k]
                if ak != 0:
                    s += ak * b[n - k]
            b[n] = -s if inv0 is None else -s * inv0
        return QSeries(b)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("series powers must be integers")
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def dilate(self, m):
        """Substitute q -> q^m, keeping the original precision."""
        if m < 1:
            raise ValueError("dilation factor must be >= 1")
        if m == 1:
            return self
        p = self.prec
        out = [0] * p
        for n, c in enumerate(self._coeffs):
            if m * n >= p:
                break
            out[m * n] = c
        return QSeries(out)

    def shift(self, e):
        """Multiply by q^e (e >= 0), truncating back to the same precision."""
        if e < 0:
            raise ValueError("shift exponent must be >= 0")
        if e == 0:
            return self
        p = self.prec
        return QSeries(([0] * e + list(self._coeffs))[:p])

    def render(self):
        """Human-readable form: "1 + 8*q + 24*q^2 + ... + O(q^5)"."""
        parts = []
        for n, c in enumerate(self._coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if n == 0:
                body = str(mag)
            elif mag == 1:
                body = "q" if n == 1 else f"q^{n}"
            else:
                body = f"{mag}*q" if n == 1 else f"{mag}*q^{n}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        if not parts:
            parts.append("0")
        return " ".join(parts) + f" + O(q^{self.prec})"

    def __repr__(self):
        return f"QSeries({self.render()})"


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def invert(a):
    return a.invert()


def dilate(a, m):
    return a.dilate(m)


def scale(a, c):
    return a.scale(c)
