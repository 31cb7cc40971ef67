"""Exception types shared across the package."""


class Eta24Error(Exception):
    """Base class for all domain errors raised by this package."""


class NonUnitSeries(Eta24Error):
    """Series inversion requested but the constant term is zero."""


class FractionalExponent(Eta24Error):
    """Eta quotient whose q-prefactor exponent is not an integer."""


class NegativeValuation(Eta24Error):
    """Eta quotient whose q-prefactor exponent is a negative integer."""


class NonIntegralWeight(Eta24Error):
    """Operation requires an integral weight eta quotient."""


class UnknownPair(Eta24Error):
    """(t1, t2) is not one of the supported Eisenstein series pairs."""


class BadDivisor(Eta24Error):
    """d is not an admissible divisor for an L_d series."""


class NotInSpace(Eta24Error):
    """Target series is provably not in the requested space."""


class AmbiguousSolution(Eta24Error):
    """Linear system is underdetermined; signals a defective basis."""


class UnknownForm(Eta24Error):
    """Quadruple has no stored closed-form representation-number formula."""


class ParseError(Eta24Error):
    """Malformed CLI spec string; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
