import random
from fractions import Fraction

import pytest

from eta24.errors import NonUnitSeries
from eta24.qseries import QSeries


def series(*coeffs):
    return QSeries(coeffs)


def random_series(rng, prec):
    return QSeries(
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(prec)]
    )


def test_add_examples():
    assert series(1, 2) + series(3, 0) == series(4, 2)
    f = series(2, 5, 7)
    assert f + QSeries.zero(3) == f
    assert (series(Fraction(1, 2)) + series(Fraction(1, 3))).coefficient(0) == Fraction(5, 6)


def test_add_truncates_to_min_precision():
    out = series(1, 2, 3) + series(1, 1)
    assert out.prec == 2
    assert out.coeffs == (2, 3)


def test_mul_examples():
    f = series(1, 1, 0)
    assert f * f == series(1, 2, 1)
    g = series(3, -1, 4)
    assert g * QSeries.one(3) == g
    geo = series(1, 1, 1, 1, 1)
    assert (series(1, -1, 0, 0, 0) * geo) == QSeries.one(5)


def test_invert_examples():
    assert series(1, -1, 0, 0).invert() == series(1, 1, 1, 1)
    assert series(2, 0).invert() == series(Fraction(1, 2), 0)
    f = series(1, 1, 0)
    assert f * f.invert() == QSeries.one(3)


def test_invert_requires_unit():
    with pytest.raises(NonUnitSeries):
        series(0, 1, 2).invert()


def test_dilate_examples():
    assert series(1, 1, 0, 0, 0).dilate(2) == series(1, 0, 1, 0, 1)
    f = series(2, 3, 4)
    assert f.dilate(1) == f
    assert series(0, 1, 3, 0, 0, 0, 0).dilate(3) == series(0, 0, 0, 1, 0, 0, 3)


def test_scale_sub_equality():
    assert series(1, 1).scale(8) == series(8, 8)
    f = series(5, -2, 3)
    assert (f - f).is_zero()
    assert series(1, 1) == series(1, 1, 7)  # compared at shared precision 2


def test_pow():
    f = series(1, 2, 3, 4)
    assert f ** 0 == QSeries.one(4)
    assert f ** 3 == f * f * f
    assert f ** -2 == (f.invert()) ** 2


def test_shift():
    assert series(1, 2, 3).shift(1) == series(0, 1, 2)
    assert series(1, 2, 3).shift(0) == series(1, 2, 3)


def test_render():
    assert series(1, 8, 24).render() == "1 + 8*q + 24*q^2 + O(q^3)"
    assert series(Fraction(1, 24), 1).render() == "1/24 + q + O(q^2)"
    assert series(0, -1, 0, Fraction(-3, 4)).render() == "-q - 3/4*q^3 + O(q^4)"
    assert QSeries.zero(2).render() == "0 + O(q^2)"


def test_ring_axioms_randomized():
    rng = random.Random(7)
    for _ in range(200):
        a = random_series(rng, rng.randint(2, 7))
        b = random_series(rng, rng.randint(2, 7))
        c = random_series(rng, rng.randint(2, 7))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_invert_two_sided_randomized():
    rng = random.Random(11)
    for _ in range(50):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        if coeffs[0] == 0:
            coeffs[0] = Fraction(1, 3)
        a = QSeries(coeffs)
        assert a * a.invert() == QSeries.one(6)
        assert a.invert() * a == QSeries.one(6)


def test_dilate_multiplicative_randomized():
    rng = random.Random(13)
    for _ in range(50):
        a = random_series(rng, 12)
        b = random_series(rng, 12)
        m = rng.randint(1, 4)
        assert (a * b).dilate(m) == a.dilate(m) * b.dilate(m)


def test_coefficients_stay_exact():
    f = series(Fraction(1, 3), Fraction(1, 7)) * series(Fraction(3, 5), Fraction(2, 11))
    for c in f.coeffs:
        assert isinstance(c, (int, Fraction))
    assert f.coefficient(0) == Fraction(1, 5)


def test_coefficient_out_of_range():
    with pytest.raises(IndexError):
        series(1, 2).coefficient(2)
