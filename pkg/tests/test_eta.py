from fractions import Fraction
from math import gcd

import pytest

from eta24.errors import FractionalExponent, NegativeValuation, ParseError
from eta24.eta import (
    CUSP_GENERATORS,
    PHI_AS_ETA_QUOTIENT,
    EtaQuotient,
    eta_series,
    format_eta_quotient,
    group_index,
    parse_eta_quotient,
    squarefree_kernel,
)
from eta24.qseries import QSeries
from eta24.theta import phi_series


def eta_product_oracle(delta, prec):
    """Reference expansion of prod_{n>=1} (1 - q^(delta n)) by direct polynomial products."""
    coeffs = [0] * prec
    coeffs[0] = 1
    n = 1
    while delta * n < prec:
        new = coeffs[:]
        for i in range(prec - delta * n):
            if coeffs[i]:
                new[i + delta * n] -= coeffs[i]
        coeffs = new
        n += 1
    return tuple(coeffs)


@pytest.mark.parametrize("delta,prec", [(1, 8), (2, 5), (1, 60), (3, 50), (12, 40)])
def test_eta_series_matches_finite_product(delta, prec):
    assert eta_series(delta, prec).coeffs == eta_product_oracle(delta, prec)


def test_eta_series_examples():
    assert eta_series(1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert eta_series(2, 5).coeffs == (1, 0, -1, 0, -1)
    assert eta_series(7, 1).coeffs == (1,)


def test_quotient_A_expansion():
    a = CUSP_GENERATORS["A"].series(6)
    assert a.coeffs == (0, 1, 0, -1, 0, -2)


def test_phi_identity_to_500():
    assert PHI_AS_ETA_QUOTIENT.series(500) == phi_series(1, 500)


def test_eta_alone_has_fractional_exponent():
    with pytest.raises(FractionalExponent):
        EtaQuotient({1: 1}).series(4)


def test_negative_valuation_rejected():
    with pytest.raises(NegativeValuation):
        EtaQuotient({1: 24, 2: -24}).series(4)  # e = (24 - 48)/24 = -1


def test_weights_and_characters():
    assert CUSP_GENERATORS["A"].weight == 2
    assert CUSP_GENERATORS["A"].character_label() == 1
    assert CUSP_GENERATORS["B1"].character_label() == 8
    assert CUSP_GENERATORS["B2"].character_label() == 8
    assert CUSP_GENERATORS["C1"].character_label() == 24
    assert CUSP_GENERATORS["C2"].character_label() == 24
    f = EtaQuotient({1: 4})
    assert f.weight == 2 and f.character_label() == 1


def test_character_discriminants_are_fundamental():
    assert CUSP_GENERATORS["B1"].character_discriminant() == 8
    assert CUSP_GENERATORS["C1"].character_discriminant() == 24
    assert EtaQuotient({3: 4}).character_discriminant() == 1
    assert EtaQuotient({1: 3, 3: 1}).character_discriminant() == 12


def test_squarefree_kernel():
    assert squarefree_kernel(1152) == 2
    assert squarefree_kernel(-18) == -2
    assert squarefree_kernel(1) == 1


def test_cusp_order_leading_exponent():
    for name, f in CUSP_GENERATORS.items():
        orders = f.cusp_orders()
        e = f.prefactor_exponent()
        assert orders.order_at(24) == e, name
        series = f.series(10)
        lead = next(n for n in range(10) if series.coefficient(n) != 0)
        assert lead == e, name


def test_cusp_generators_lead_with_coefficient_one():
    # A, B1, B2, C2 start at q; C1 starts at q^2
    for name, lead in (("A", 1), ("B1", 1), ("B2", 1), ("C1", 2), ("C2", 1)):
        series = CUSP_GENERATORS[name].series(4)
        assert series.coefficient(0) == 0
        assert all(series.coefficient(n) == 0 for n in range(lead))
        assert series.coefficient(lead) == 1


def independent_order(f, c):
    # one-off re-evaluation of the order formula, kept separate from the
    # implementation on purpose
    N = f.level
    total = Fraction(0)
    for d, r in f.exponents.items():
        total += Fraction(N, 24) * Fraction(gcd(c, d) ** 2, gcd(c, N // c) * c * d) * r
    return total


def test_cusp_orders_against_independent_evaluation():
    quotients = list(CUSP_GENERATORS.values()) + [
        EtaQuotient({1: 4}),
        EtaQuotient({2: -1, 4: 5, 8: 1, 24: -1}),
    ]
    for f in quotients:
        report = f.cusp_orders()
        for c in (1, 2, 3, 4, 6, 8, 12, 24):
            assert report.order_at(c) == independent_order(f, c), (f, c)


def test_eta_fourth_power_orders_all_positive():
    # every order of eta(z)^4 at level 24 is positive under the formula
    f = EtaQuotient({1: 4})
    assert f.cusp_orders().min_order() > 0
    assert f.is_holomorphic_modular_form()


def test_weighted_cusp_order_sum_is_eight():
    # sum over cusps of order * multiplicity = k * [SL2(Z):Gamma0(24)] / 12 = 8
    for name, f in CUSP_GENERATORS.items():
        assert f.cusp_orders().weighted_sum() == 8, name


def test_group_index():
    assert group_index(24) == 48
    assert group_index(12) == 24
    assert group_index(1) == 1


def test_widths():
    report = CUSP_GENERATORS["A"].cusp_orders()
    widths = {c: report.width_at(c) for c in (1, 2, 3, 4, 6, 8, 12, 24)}
    assert widths == {1: 24, 2: 6, 3: 8, 4: 3, 6: 2, 8: 3, 12: 1, 24: 1}
    assert sum(widths.values()) == 48


def test_holomorphy():
    for f in CUSP_GENERATORS.values():
        assert f.is_holomorphic_modular_form()
    assert EtaQuotient({}).is_holomorphic_modular_form()  # constant 1
    assert not EtaQuotient({1: 8, 2: -4}).is_holomorphic_modular_form()


def test_transformation_congruences():
    for f in CUSP_GENERATORS.values():
        assert f.satisfies_transformation_congruences()
    assert not EtaQuotient({1: 4}).satisfies_transformation_congruences()


def test_parse_and_format():
    f = parse_eta_quotient("2:1,4:1,6:1,12:1")
    assert f == CUSP_GENERATORS["A"]
    assert format_eta_quotient(f) == "2:1,4:1,6:1,12:1"
    with pytest.raises(ParseError):
        parse_eta_quotient("2:1,5:1")
    with pytest.raises(ParseError):
        parse_eta_quotient("2:x")
    with pytest.raises(ParseError):
        parse_eta_quotient("2")


def test_series_precision_and_prefactor():
    f = CUSP_GENERATORS["C1"]  # leading exponent 2
    s = f.series(3)
    assert s.prec == 3
    assert s.coeffs == (0, 0, 1)
