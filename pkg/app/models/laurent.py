"""
Aritmética exata no anel de coeficientes Z[A, A^-1].

Polinômios de Laurent são armazenados como tabelas esparsas expoente -> inteiro
(precisão arbitrária), sempre em forma canônica: nenhum coeficiente nulo é
guardado, de modo que a igualdade é estrutural.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterator, Mapping
from functools import lru_cache
from types import MappingProxyType

import numpy as np

from app.core.exceptions import DivisionByZeroError, EvaluationOverflowError, NotDivisibleError, ParseError

ComplexValue = complex

_TERM_RE = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


class LaurentPoly:
    """Elemento imutável de Z[A, A^-1]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        items: dict[int, int] = {}
        for exp, coeff in (coeffs or {}).items():
            value = int(coeff)
            if value:
                items[int(exp)] = value
        self._coeffs = dict(sorted(items.items()))

    # Construtores -------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """Retorna coeff * A^exp."""
        return cls({exp: coeff})

    @classmethod
    def _from_canonical(cls, coeffs: dict[int, int]) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly._coeffs = dict(sorted(coeffs.items()))
        return poly

    # Consulta -------------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[int, int]:
        return MappingProxyType(self._coeffs)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Itera (expoente, coeficiente) em ordem crescente de expoente."""
        return iter(self._coeffs.items())

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("polinômio nulo não tem grau")
        return next(reversed(self._coeffs))

    @property
    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("polinômio nulo não tem valuação")
        return next(iter(self._coeffs))

    @property
    def span(self) -> int:
        return self.degree - self.valuation

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    # Aritmética -------------------------------------------------------------

    def __add__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        result = dict(self._coeffs)
        for exp, coeff in other_poly._coeffs.items():
            value = result.get(exp, 0) + coeff
            if value:
                result[exp] = value
            else:
                result.pop(exp, None)
        return LaurentPoly._from_canonical(result)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_canonical({exp: -coeff for exp, coeff in self._coeffs.items()})

    def __sub__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly + (-self)

    def __mul__(self, other: object) -> LaurentPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        result: dict[int, int] = {}
        for exp_a, coeff_a in self._coeffs.items():
            for exp_b, coeff_b in other_poly._coeffs.items():
                exp = exp_a + exp_b
                result[exp] = result.get(exp, 0) + coeff_a * coeff_b
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            if len(self._coeffs) != 1 or abs(next(iter(self._coeffs.values()))) != 1:
                raise NotDivisibleError("apenas monômios unitários têm inverso em Z[A, A^-1]")
            ((exp, coeff),) = self._coeffs.items()
            return LaurentPoly.monomial(exp * exponent, coeff ** abs(exponent))
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiplica por A^k."""
        return LaurentPoly._from_canonical({exp + k: coeff for exp, coeff in self._coeffs.items()})

    def mirror(self) -> LaurentPoly:
        """Substitui A por A^-1 (imagem espelhada)."""
        return LaurentPoly._from_canonical({-exp: coeff for exp, coeff in self._coeffs.items()})

    def evaluate(self, value: complex) -> complex:
        """Avalia numericamente em um ponto complexo não nulo."""
        return complex(sum(coeff * value**exp for exp, coeff in self._coeffs.items()))

    def evaluate_at_root(self, r: int) -> ComplexValue:
        return evaluate_at_root(self, r)

    # Igualdade e representação -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self._coeffs == other_poly._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)})"

    def __str__(self) -> str:
        return format_laurent(self)


def _coerce(value: object) -> LaurentPoly | None:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return LaurentPoly.constant(value)
    return None


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


@lru_cache(maxsize=4096)
def quantum_integer(m: int) -> LaurentPoly:
    """
    Inteiro quântico [m] = (A^2m - A^-2m) / (A^2 - A^-2).

    Args:
        m: Qualquer inteiro

    Returns:
        Soma de A^(2m-2-4j) para j = 0..m-1; zero para m=0; -[-m] para m<0
    """
    if m == 0:
        return LaurentPoly.zero()
    if m < 0:
        return -quantum_integer(-m)
    return LaurentPoly._from_canonical({2 * m - 2 - 4 * j: 1 for j in range(m)})


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Divisão longa exata a partir do expoente mais alto.

    Args:
        a: Dividendo
        b: Divisor não nulo

    Returns:
        Quociente q com a = q * b

    Raises:
        DivisionByZeroError: Se b for nulo
        NotDivisibleError: Se não existir quociente de Laurent
    """
    if b.is_zero:
        raise DivisionByZeroError("divisão por zero")
    if a.is_zero:
        return LaurentPoly.zero()

    b_top = b.degree
    b_lead = b.coefficient(b_top)
    b_span = b.span
    remainder = dict(a.coeffs)
    quotient: dict[int, int] = {}

    while remainder:
        top = max(remainder)
        if top - min(remainder) < b_span:
            raise NotDivisibleError(f"{format_laurent(a)} não é divisível por {format_laurent(b)}")
        factor, rest = divmod(remainder[top], b_lead)
        if rest:
            raise NotDivisibleError(f"{format_laurent(a)} não é divisível por {format_laurent(b)}")
        offset = top - b_top
        quotient[offset] = factor
        for exp, coeff in b.terms():
            target = exp + offset
            value = remainder.get(target, 0) - factor * coeff
            if value:
                remainder[target] = value
            else:
                remainder.pop(target, None)

    return LaurentPoly(quotient)


def root_of_unity(r: int) -> ComplexValue:
    """A = exp(pi i / (2(r+1)))."""
    if r < 1:
        raise ValueError(f"r deve ser >= 1, recebido {r}")
    return complex(np.exp(1j * math.pi / (2 * (r + 1))))


def evaluate_at_root(a: LaurentPoly, r: int) -> ComplexValue:
    """
    Avalia em A = exp(pi i / (2(r+1))).

    Os expoentes são reduzidos exatamente (A^(2(r+1)) = -1) antes da soma em
    ponto flutuante, de modo que graus altos não perdem precisão.

    Raises:
        EvaluationOverflowError: Se algum coeficiente reduzido não couber em float
    """
    if r < 1:
        raise ValueError(f"r deve ser >= 1, recebido {r}")
    half_period = 2 * (r + 1)
    folded = [0] * half_period
    for exp, coeff in a.terms():
        reduced = exp % (2 * half_period)
        if reduced >= half_period:
            folded[reduced - half_period] -= coeff
        else:
            folded[reduced] += coeff
    phases = np.exp(1j * np.pi * np.arange(half_period) / half_period)
    try:
        weights = np.array(folded, dtype=float)
    except OverflowError as e:
        raise EvaluationOverflowError(f"coeficiente fora do alcance de float em r={r}") from e
    value = complex(np.dot(weights, phases))
    if not np.isfinite(value):
        raise EvaluationOverflowError(f"avaliação em r={r} não é finita")
    return value


def format_laurent(a: LaurentPoly) -> str:
    """Formato texto canônico, ex.: {-2:1, 2:1} para [2]."""
    return "{" + ", ".join(f"{exp}:{coeff}" for exp, coeff in a.terms()) + "}"


def parse_laurent(text: str) -> LaurentPoly:
    """
    Lê o formato produzido por format_laurent.

    Raises:
        ParseError: Se o texto for malformado, repetir expoentes ou trazer coeficiente zero
    """
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"polinômio malformado: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return LaurentPoly.zero()

    coeffs: dict[int, int] = {}
    for item in inner.split(","):
        match = _TERM_RE.match(item)
        if match is None:
            raise ParseError(f"termo malformado: {item.strip()!r}")
        exp, coeff = int(match.group(1)), int(match.group(2))
        if exp in coeffs:
            raise ParseError(f"expoente repetido: {exp}")
        if coeff == 0:
            raise ParseError(f"coeficiente zero no expoente {exp}")
        coeffs[exp] = coeff
    return LaurentPoly(coeffs)


A = LaurentPoly.monomial(1)
DELTA = LaurentPoly({2: -1, -2: -1})
