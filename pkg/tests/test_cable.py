import math
from fractions import Fraction

import pytest
import sympy

from app.core.exceptions import InvalidParametersError, MissingColorError, ParseError
from app.core.validators import validate_cable_params
from app.models.cable import format_expansion, from_record, parse_expansion, to_record
from app.models.laurent import LaurentPoly, divide_exact, quantum_integer
from app.models.skein import SkeinElement, close_in_s3, unknot_value
from app.schemas.skein import CableParams
from app.services.cable_calculator import CableCalculator

calculator = CableCalculator()

TREFOIL_J1 = LaurentPoly({-18: 1, -10: -1, -6: -1, -2: -1})
TREFOIL_J2 = LaurentPoly({-4: 1, -8: 1, -12: 1, -16: 1, -20: 1, -32: -1, -36: -1, -40: -1, -48: 1})


def coprime_grid():
    for p in range(1, 6):
        for q in range(-7, 8):
            if math.gcd(p, abs(q)) == 1:
                yield p, q


def test_theorem2_trefoil_expansion():
    expansion = calculator.theorem2_expand(2, 3, 1, 0)
    assert expansion.element == SkeinElement({0: 1, 2: LaurentPoly.monomial(12, -1)})
    assert expansion.sigma == 6


def test_theorem2_core_meridian_product():
    # (1, 0) com framing 0 é o produto e_N e_s
    for n in range(4):
        for s in range(4):
            expansion = calculator.theorem2_expand(1, 0, n, s)
            assert expansion.element == SkeinElement.basis(n) * SkeinElement.basis(s)


def test_theorem2_zero_color_is_core():
    assert calculator.theorem2_expand(3, 5, 0, 2).element == SkeinElement.basis(2)


@pytest.mark.parametrize("p,q", [(0, 1), (-2, 3), (4, 2), (3, 6)])
def test_invalid_cable_params(p, q):
    with pytest.raises(InvalidParametersError):
        calculator.theorem2_expand(p, q, 1, 0)


def test_torus_decomposition():
    decomposition = calculator.torus_decomposition(3, -7)
    assert (decomposition.epsilon, decomposition.beta, decomposition.alpha) == (-3, 2, 6)
    assert decomposition.epsilon * 3 + decomposition.beta == -7


def test_theorem1_matches_theorem2_on_grid():
    for p, q in coprime_grid():
        for n in range(5):
            for s in range(4):
                folded = calculator.theorem1_expand(p, q, n, s).element
                assert folded == calculator.theorem2_expand(p, q, n, s).element, (p, q, n, s)


def test_theorem1_coefficient_outside_support_is_zero():
    assert calculator.theorem1_coeff(2, 3, 1, 0, 1).is_zero
    assert calculator.theorem1_coeff(2, 3, 1, 0, 2) == LaurentPoly.monomial(12, -1)


def test_lemma1_twist_on_grid():
    for p, q in coprime_grid():
        for n in range(5):
            for s in range(4):
                twisted = calculator.lemma1_twist(calculator.theorem2_expand(p, q, n, s))
                assert twisted.element == calculator.theorem2_expand(p, q + p, n, s).element, (p, q, n, s)
                assert twisted.sigma == p * (q + p)


def test_lemma1_twist_requires_canonical_framing():
    expansion = calculator.framing_adjust(calculator.theorem2_expand(2, 3, 1, 0), 1)
    with pytest.raises(InvalidParametersError):
        calculator.lemma1_twist(expansion)


def test_framing_adjust_is_global_phase():
    expansion = calculator.theorem2_expand(2, 3, 1, 0)
    adjusted = calculator.framing_adjust(expansion, -6)
    assert adjusted.sigma == 0
    assert adjusted.element == expansion.element.scale(LaurentPoly.monomial(-18))
    assert calculator.framing_adjust(adjusted, 6).element == expansion.element


def test_expand_uses_requested_framing():
    canonical = calculator.expand(validate_cable_params(2, 3, 1, 0))
    assert canonical.sigma == 6
    framed = calculator.expand(validate_cable_params(2, 3, 1, 0, sigma=0))
    assert framed.sigma == 0
    assert framed.element == calculator.framing_adjust(canonical, -6).element


def test_torus_knot_jones_trefoil():
    assert calculator.torus_knot_jones(2, 3, 1, 0) == TREFOIL_J1
    assert calculator.torus_knot_jones(2, 3, 2, 0) == TREFOIL_J2
    assert calculator.torus_knot_jones(2, 3, 0, 0) == LaurentPoly.one()


def test_torus_knot_jones_unknot():
    for n in range(5):
        assert calculator.torus_knot_jones(1, 4, n, 0) == unknot_value(n)


def test_torus_knot_jones_symmetry():
    for p in range(1, 8):
        for q in range(p + 1, 8):
            if math.gcd(p, q) != 1:
                continue
            for n in range(5):
                assert calculator.torus_knot_jones(p, q, n, 0) == calculator.torus_knot_jones(q, p, n, 0), (p, q, n)


def test_torus_knot_jones_divisible_by_unknot():
    normalized = divide_exact(TREFOIL_J1, unknot_value(1))
    assert normalized == LaurentPoly({-16: -1, -12: 1, -4: 1})


def test_continued_fraction():
    assert calculator.continued_fraction(5, 7).terms == (1, 2, 2)
    assert calculator.continued_fraction(2, -3).terms == (-2, 2)
    assert calculator.continued_fraction(1, 0).terms == (0,)
    assert calculator.continued_fraction(2, -3).value() == Fraction(-3, 2)


def test_continued_fraction_matches_sympy():
    for p, q in [(5, 7), (3, 2), (7, 19), (4, 9)]:
        assert list(calculator.continued_fraction(p, q).terms) == sympy.continued_fraction_periodic(q, p)
        assert calculator.continued_fraction(p, q).value() == Fraction(q, p)


def test_twist_swap_path():
    steps = calculator.twist_swap_path(3, 2)
    assert [(step.kind, step.p, step.q) for step in steps] == [
        ("twist", 1, 1),
        ("twist", 1, 2),
        ("swap", 2, 1),
        ("twist", 2, 3),
        ("swap", 3, 2),
    ]
    final = calculator.twist_swap_path(5, 7)[-1]
    assert (final.p, final.q) == (5, 7)


def test_twist_swap_path_rejects_negative_q():
    with pytest.raises(InvalidParametersError):
        calculator.twist_swap_path(2, -3)


def test_satellite_with_unknot_companion_closes_in_s3():
    expansion = calculator.theorem2_expand(2, 3, 2, 1)
    companion = {l: unknot_value(l) for l in range(10)}  # noqa: E741
    assert calculator.satellite_evaluate(expansion, companion) == close_in_s3(expansion.element)


def test_satellite_core_expansion_returns_companion_value():
    expansion = calculator.theorem2_expand(1, 0, 2, 0)
    assert calculator.satellite_evaluate(expansion, {2: TREFOIL_J2}) == TREFOIL_J2


def test_satellite_cable_of_trefoil():
    expansion = calculator.theorem2_expand(2, 1, 1, 0)
    value = calculator.satellite_evaluate(expansion, {0: LaurentPoly.one(), 2: TREFOIL_J2})
    assert value == LaurentPoly.one() - TREFOIL_J2.shift(4)


def test_satellite_missing_colors():
    expansion = calculator.theorem2_expand(2, 1, 1, 0)
    with pytest.raises(MissingColorError):
        calculator.satellite_evaluate(expansion, {0: LaurentPoly.one()})


def test_iterated_cable_of_unknot():
    outer = CableParams(p=2, q=1, n=1, sigma=0)
    inner = CableParams(p=1, q=2, sigma=0)
    companion = {l: unknot_value(l) for l in range(6)}  # noqa: E741
    assert calculator.iterated_cable(outer, inner, companion) == -quantum_integer(2)


def test_iterated_cable_rejects_colored_core():
    with pytest.raises(InvalidParametersError):
        calculator.iterated_cable(CableParams(p=2, q=1, n=1, s=1), CableParams(p=1, q=2), {})


def test_expansion_text_format():
    expansion = calculator.theorem2_expand(2, 3, 1, 0)
    text = format_expansion(expansion)
    assert text == "2 3 1 0 6\n{0: {0:1}, 2: {12:-1}}"
    parsed = parse_expansion(text)
    assert parsed.element == expansion.element
    assert parsed.params == expansion.params.model_copy(update={"sigma": 6})


def test_expansion_record():
    expansion = calculator.expand(validate_cable_params(2, 1, 1, 0, sigma=0))
    record = to_record(expansion)
    assert record.sigma == 0
    assert record.coefficients == {"0": "{-6:1}", "2": "{-2:-1}"}
    assert from_record(record).element == expansion.element
    assert parse_expansion(record.model_dump_json()).element == expansion.element


@pytest.mark.parametrize("text", ["2 3 1\n{}", "a b c d e\n{}", "2 4 1 0 8\n{}", "2 3 1 0 6\n{0 {0:1}}"])
def test_parse_expansion_rejects(text):
    with pytest.raises((ParseError, InvalidParametersError)):
        parse_expansion(text)
