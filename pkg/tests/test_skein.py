import numpy as np
import pytest
import sympy

from app.core.exceptions import InvalidParametersError, ParseError
from app.models.laurent import DELTA, LaurentPoly, quantum_integer
from app.models.skein import (
    AdmissibleTriple,
    SkeinElement,
    ZPolynomial,
    admissible_range,
    close_in_s3,
    e_basis_in_z,
    e_to_z,
    encircle,
    encircle_eigenvalue,
    format_skein,
    format_zpoly,
    framing_phase,
    framing_twist,
    hopf_pair,
    hopf_value,
    is_admissible,
    multiply,
    parse_skein,
    reduce_index,
    unknot_value,
    z_to_e,
)

SYMBOL = sympy.Symbol("A")


def e(n: int) -> SkeinElement:
    return SkeinElement.basis(n)


def sympy_quantum(m: int) -> sympy.Expr:
    return (SYMBOL ** (2 * m) - SYMBOL ** (-2 * m)) / (SYMBOL**2 - SYMBOL**-2)


def to_sympy(poly: LaurentPoly) -> sympy.Expr:
    return sum((coeff * SYMBOL**exp for exp, coeff in poly.terms()), sympy.Integer(0))


def random_element(rng: np.random.Generator) -> SkeinElement:
    terms = {}
    for n in rng.choice(6, size=int(rng.integers(1, 4)), replace=False):
        exps = rng.integers(-8, 9, size=2)
        coeffs = rng.integers(-5, 6, size=2)
        terms[int(n)] = LaurentPoly({int(x): int(c) for x, c in zip(exps, coeffs, strict=True)})
    return SkeinElement(terms)


def test_reduce_index():
    assert reduce_index(3) == (1, 3)
    assert reduce_index(-1) == (0, 0)
    assert reduce_index(-2) == (-1, 0)
    assert reduce_index(-5) == (-1, 3)


def test_negative_indices_are_reduced():
    assert e(-1).is_zero
    assert e(-2) == -e(0)
    assert SkeinElement({-4: 1, 2: 1}).is_zero
    assert SkeinElement({-3: LaurentPoly.monomial(2)}).coefficient(1) == LaurentPoly.monomial(2, -1)


def test_admissible_triples():
    assert is_admissible(2, 1, 1)
    assert not is_admissible(1, 1, 1)
    assert not is_admissible(3, 1, 1)
    assert list(admissible_range(2, 3)) == [1, 3, 5]
    AdmissibleTriple(0, 2, 2)
    with pytest.raises(InvalidParametersError):
        AdmissibleTriple(4, 1, 1)


def test_multiply_basis_elements():
    assert multiply(e(1), e(1)) == e(0) + e(2)
    assert e(2) * e(1) == e(1) + e(3)
    assert e(2) * e(2) == e(0) + e(2) + e(4)
    assert e(0) * e(5) == e(5)


def test_multiply_is_commutative_and_bilinear():
    a = SkeinElement({0: LaurentPoly.monomial(1), 3: DELTA})
    b = SkeinElement({1: 2, 2: LaurentPoly.monomial(-4)})
    assert a * b == b * a
    assert a * (b + e(4)) == a * b + a * e(4)


def test_multiply_is_associative():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a, b, c = random_element(rng), random_element(rng), random_element(rng)
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_scalar_multiplication():
    assert 2 * e(1) == SkeinElement({1: 2})
    assert e(1) * DELTA == SkeinElement({1: DELTA})
    assert (e(1) - e(1)).is_zero


def test_e_basis_in_z_recursion():
    assert e_basis_in_z(0) == {0: 1}
    assert e_basis_in_z(1) == {1: 1}
    assert e_basis_in_z(2) == {2: 1, 0: -1}
    assert e_basis_in_z(3) == {3: 1, 1: -2}
    assert e_basis_in_z(4) == {4: 1, 2: -3, 0: 1}


def test_basis_change_round_trip():
    element = SkeinElement({0: DELTA, 3: LaurentPoly.monomial(5, -2), 4: 1})
    assert z_to_e(e_to_z(element)) == element
    assert e_to_z(e(2)) == ZPolynomial({2: 1, 0: -1})


def test_basis_change_respects_products():
    for m in range(13):
        for n in range(13):
            assert e_to_z(e(m) * e(n)) == e_to_z(e(m)) * e_to_z(e(n)), (m, n)


def test_z_powers_in_e_basis():
    z = ZPolynomial.z_power(1)
    assert z_to_e(z * z) == e(0) + e(2)
    assert z_to_e(z * z * z) == 2 * e(1) + e(3)


def test_framing_phase():
    assert framing_phase(0, 5) == LaurentPoly.one()
    assert framing_phase(1, 1) == LaurentPoly.monomial(3, -1)
    assert framing_phase(2, 1) == LaurentPoly.monomial(8)
    assert framing_phase(1, -3) == LaurentPoly.monomial(-9, -1)
    twisted = framing_twist(e(1) + e(2), 1)
    assert twisted == SkeinElement({1: LaurentPoly.monomial(3, -1), 2: LaurentPoly.monomial(8)})


def test_framing_twist_is_invertible():
    rng = np.random.default_rng(9)
    for b in (-3, -1, 1, 2, 5):
        element = random_element(rng)
        assert framing_twist(framing_twist(element, b), -b) == element


def test_unknot_values():
    assert unknot_value(0) == LaurentPoly.one()
    assert unknot_value(1) == DELTA
    assert unknot_value(2) == quantum_integer(3)
    assert close_in_s3(e(0) + e(1)) == 1 + DELTA


def test_hopf_values():
    for k in range(4):
        assert hopf_value(0, k) == unknot_value(k)
    assert hopf_value(1, 1) == quantum_integer(4)
    assert hopf_pair(e(1), e(2)) == -quantum_integer(6)


def test_hopf_pair_is_symmetric():
    rng = np.random.default_rng(13)
    for _ in range(20):
        a, b = random_element(rng), random_element(rng)
        assert hopf_pair(a, b) == hopf_pair(b, a)


def test_encircle_eigenvalues_small():
    assert encircle_eigenvalue(0, 4) == LaurentPoly.one()
    assert encircle_eigenvalue(1, 2) == -LaurentPoly({6: 1, -6: 1})
    assert encircle(1, e(0)) == SkeinElement({0: DELTA})


def test_encircle_matches_quantum_ratio():
    for n in range(7):
        for s in range(7):
            coefficient = encircle(n, e(s)).coefficient(s)
            expected = (-1) ** n * sympy_quantum((n + 1) * (s + 1)) / sympy_quantum(s + 1)
            assert sympy.cancel(to_sympy(coefficient) - expected) == 0
            assert encircle(n, e(s)).support == [s]


def test_encircle_is_exact_up_to_twenty():
    for m in range(21):
        for n in range(21):
            assert encircle(m, e(n)).support == [n]


def test_encircle_rejects_negative_color():
    with pytest.raises(InvalidParametersError):
        encircle(-1, e(0))


def test_format_skein():
    element = SkeinElement({0: 1, 2: LaurentPoly.monomial(12, -1)})
    assert format_skein(element) == "{0: {0:1}, 2: {12:-1}}"
    assert format_skein(SkeinElement.zero()) == "{}"
    assert format_zpoly(ZPolynomial({0: DELTA, 2: 1})) == "{0: {-2:-1, 2:-1}, 2: {0:1}}"


def test_parse_skein():
    element = SkeinElement({0: 1, 2: LaurentPoly.monomial(12, -1)})
    assert parse_skein("{0: {0:1}, 2: {12:-1}}") == element
    assert parse_skein("{}") == SkeinElement.zero()


@pytest.mark.parametrize("text", ["{0: {0:1}, 0: {1:1}}", "{-1: {0:1}}", "{0: {0:1},}", "0: {0:1}", "{0 {0:1}}"])
def test_parse_skein_rejects(text):
    with pytest.raises(ParseError):
        parse_skein(text)
