"""
Álgebra de skein do toro sólido S(D x S^1).

Elementos são guardados na base e_n (n >= 0). Todo construtor passa pelos
índices por reduce_index, então índices negativos nunca são armazenados.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from app.core.exceptions import InvalidParametersError, ParseError
from app.models.laurent import LaurentPoly, divide_exact, format_laurent, parse_laurent, quantum_integer

Scalar = LaurentPoly | int

_SKEIN_TERM_RE = re.compile(r"\s*(-?\d+)\s*:\s*(\{[^{}]*\})\s*(,|$)")


def reduce_index(n: int) -> tuple[int, int]:
    """
    Reduz um índice da base usando e_n = -e_(-n-2) e e_(-1) = 0.

    Returns:
        (sinal, índice) com sinal em {+1, -1, 0}; sinal 0 significa termo nulo
    """
    if n >= 0:
        return 1, n
    if n == -1:
        return 0, 0
    return -1, -n - 2


def _as_poly(value: Scalar) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value)


class SkeinElement:
    """Elemento imutável de S(D x S^1) na base e_n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        self._coeffs = _collect((coeffs or {}).items())

    @classmethod
    def zero(cls) -> SkeinElement:
        return cls()

    @classmethod
    def basis(cls, n: int) -> SkeinElement:
        """Retorna e_n (índices negativos já reduzidos)."""
        return cls({n: 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Scalar]]) -> SkeinElement:
        element = cls.__new__(cls)
        element._coeffs = _collect(terms)
        return element

    @property
    def coeffs(self) -> Mapping[int, LaurentPoly]:
        return MappingProxyType(self._coeffs)

    @property
    def support(self) -> list[int]:
        return list(self._coeffs)

    def items(self) -> Iterator[tuple[int, LaurentPoly]]:
        return iter(self._coeffs.items())

    def coefficient(self, n: int) -> LaurentPoly:
        sign, index = reduce_index(n)
        if sign == 0:
            return LaurentPoly.zero()
        return sign * self._coeffs.get(index, LaurentPoly.zero())

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def map_coefficients(self, fn: Callable[[int, LaurentPoly], LaurentPoly]) -> SkeinElement:
        """Aplica um operador diagonal e_n -> fn(n, c) e_n."""
        return SkeinElement.from_terms((n, fn(n, coeff)) for n, coeff in self._coeffs.items())

    def scale(self, scalar: Scalar) -> SkeinElement:
        factor = _as_poly(scalar)
        return self.map_coefficients(lambda _n, coeff: coeff * factor)

    def __add__(self, other: object) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return SkeinElement.from_terms([*self._coeffs.items(), *other._coeffs.items()])

    def __neg__(self) -> SkeinElement:
        return self.scale(-1)

    def __sub__(self, other: object) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> SkeinElement:
        if isinstance(other, SkeinElement):
            return multiply(self, other)
        if isinstance(other, LaurentPoly | int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> SkeinElement:
        if isinstance(other, LaurentPoly | int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"SkeinElement({format_skein(self)})"

    def __str__(self) -> str:
        return format_skein(self)


def _collect(terms: Iterable[tuple[int, Scalar]]) -> dict[int, LaurentPoly]:
    acc: dict[int, LaurentPoly] = {}
    for n, coeff in terms:
        sign, index = reduce_index(int(n))
        if sign == 0:
            continue
        acc[index] = acc.get(index, LaurentPoly.zero()) + sign * _as_poly(coeff)
    return {n: acc[n] for n in sorted(acc) if acc[n]}


class ZPolynomial:
    """Polinômio em z = e_1 com coeficientes em Z[A, A^-1]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        acc: dict[int, LaurentPoly] = {}
        for degree, coeff in (coeffs or {}).items():
            if degree < 0:
                raise ValueError(f"grau negativo em z: {degree}")
            acc[degree] = acc.get(degree, LaurentPoly.zero()) + _as_poly(coeff)
        self._coeffs = {d: acc[d] for d in sorted(acc) if acc[d]}

    @classmethod
    def z_power(cls, n: int, coeff: Scalar = 1) -> ZPolynomial:
        return cls({n: coeff})

    @property
    def coeffs(self) -> Mapping[int, LaurentPoly]:
        return MappingProxyType(self._coeffs)

    def coefficient(self, degree: int) -> LaurentPoly:
        return self._coeffs.get(degree, LaurentPoly.zero())

    def items(self) -> Iterator[tuple[int, LaurentPoly]]:
        return iter(self._coeffs.items())

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: object) -> ZPolynomial:
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        acc = dict(self._coeffs)
        for degree, coeff in other._coeffs.items():
            acc[degree] = acc.get(degree, LaurentPoly.zero()) + coeff
        return ZPolynomial(acc)

    def __mul__(self, other: object) -> ZPolynomial:
        if isinstance(other, LaurentPoly | int):
            factor = _as_poly(other)
            return ZPolynomial({d: c * factor for d, c in self._coeffs.items()})
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        acc: dict[int, LaurentPoly] = {}
        for da, ca in self._coeffs.items():
            for db, cb in other._coeffs.items():
                acc[da + db] = acc.get(da + db, LaurentPoly.zero()) + ca * cb
        return ZPolynomial(acc)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"ZPolynomial({format_zpoly(self)})"


@dataclass(frozen=True)
class AdmissibleTriple:
    """Tripla (l, m, n) com l+m+n par e |m-n| <= l <= m+n."""

    l: int  # noqa: E741
    m: int
    n: int

    def __post_init__(self) -> None:
        if not is_admissible(self.l, self.m, self.n):
            raise InvalidParametersError(f"tripla não admissível: ({self.l}, {self.m}, {self.n})")


def is_admissible(l: int, m: int, n: int) -> bool:  # noqa: E741
    if min(l, m, n) < 0 or (l + m + n) % 2:
        return False
    return abs(m - n) <= l <= m + n


def admissible_range(m: int, n: int) -> range:
    """Índices l tais que (l, m, n) é admissível."""
    return range(abs(m - n), m + n + 1, 2)


def multiply(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """Produto e_m e_n = soma de e_l sobre as triplas (l, m, n) admissíveis."""
    terms: list[tuple[int, LaurentPoly]] = []
    for m, coeff_a in a.items():
        for n, coeff_b in b.items():
            product = coeff_a * coeff_b
            terms.extend((l, product) for l in admissible_range(m, n))  # noqa: E741
    return SkeinElement.from_terms(terms)


@lru_cache(maxsize=512)
def _e_in_z(n: int) -> tuple[tuple[int, int], ...]:
    # e_(n+1) = z e_n - e_(n-1)
    previous: dict[int, int] = {}
    current: dict[int, int] = {0: 1}
    for _ in range(n):
        shifted = {d + 1: c for d, c in current.items()}
        for d, c in previous.items():
            shifted[d] = shifted.get(d, 0) - c
        previous, current = current, {d: c for d, c in shifted.items() if c}
    return tuple(sorted(current.items()))


@lru_cache(maxsize=512)
def _z_in_e(n: int) -> tuple[tuple[int, int], ...]:
    # z e_k = e_(k-1) + e_(k+1), com e_(-1) = 0
    current: dict[int, int] = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for k, c in current.items():
            nxt[k + 1] = nxt.get(k + 1, 0) + c
            if k > 0:
                nxt[k - 1] = nxt.get(k - 1, 0) + c
        current = nxt
    return tuple(sorted(current.items()))


def e_basis_in_z(n: int) -> dict[int, int]:
    """Coeficientes inteiros de e_n como polinômio mônico em z."""
    return dict(_e_in_z(n))


def e_to_z(a: SkeinElement) -> ZPolynomial:
    acc: dict[int, LaurentPoly] = {}
    for n, coeff in a.items():
        for degree, c in _e_in_z(n):
            acc[degree] = acc.get(degree, LaurentPoly.zero()) + coeff * c
    return ZPolynomial(acc)


def z_to_e(p: ZPolynomial) -> SkeinElement:
    terms: list[tuple[int, LaurentPoly]] = []
    for degree, coeff in p.items():
        terms.extend((k, coeff * c) for k, c in _z_in_e(degree))
    return SkeinElement.from_terms(terms)


def framing_phase(n: int, b: int) -> LaurentPoly:
    """Fase (-1)^(bn) A^(b(n^2+2n)) de uma mudança de framing b na cor n."""
    return LaurentPoly.monomial(b * (n * n + 2 * n), -1 if (b * n) % 2 else 1)


def framing_twist(a: SkeinElement, b: int) -> SkeinElement:
    return a.map_coefficients(lambda n, coeff: coeff * framing_phase(n, b))


def unknot_value(n: int) -> LaurentPoly:
    """<e_n>_U = (-1)^n [n+1]."""
    value = quantum_integer(n + 1)
    return -value if n % 2 else value


def close_in_s3(a: SkeinElement) -> LaurentPoly:
    result = LaurentPoly.zero()
    for n, coeff in a.items():
        result = result + coeff * unknot_value(n)
    return result


def hopf_value(s: int, k: int) -> LaurentPoly:
    """<e_s, e_k>_H = (-1)^(s+k) [(s+1)(k+1)]."""
    value = quantum_integer((s + 1) * (k + 1))
    return -value if (s + k) % 2 else value


def hopf_pair(a: SkeinElement, b: SkeinElement) -> LaurentPoly:
    result = LaurentPoly.zero()
    for s, coeff_a in a.items():
        for k, coeff_b in b.items():
            result = result + coeff_a * coeff_b * hopf_value(s, k)
    return result


@lru_cache(maxsize=4096)
def encircle_eigenvalue(m: int, n: int) -> LaurentPoly:
    """(-1)^m [(m+1)(n+1)] / [n+1], calculado por divisão exata."""
    ratio = divide_exact(quantum_integer((m + 1) * (n + 1)), quantum_integer(n + 1))
    return -ratio if m % 2 else ratio


def encircle(m: int, a: SkeinElement) -> SkeinElement:
    if m < 0:
        raise InvalidParametersError(f"cor do meridiano deve ser >= 0, recebido {m}")
    return a.map_coefficients(lambda n, coeff: coeff * encircle_eigenvalue(m, n))


def format_skein(a: SkeinElement) -> str:
    """Formato texto, ex.: {0: {0:1}, 2: {12:-1}}."""
    return "{" + ", ".join(f"{n}: {format_laurent(coeff)}" for n, coeff in a.items()) + "}"


def format_zpoly(p: ZPolynomial) -> str:
    """Formato texto por grau em z, ex.: {0: {-4:-1, 0:-1}, 2: {1:1}}."""
    return "{" + ", ".join(f"{d}: {format_laurent(coeff)}" for d, coeff in p.items()) + "}"


def parse_skein(text: str) -> SkeinElement:
    """
    Lê o formato produzido por format_skein.

    Raises:
        ParseError: Se o texto for malformado ou repetir índices
    """
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"elemento malformado: {text!r}")
    inner = body[1:-1].strip()
    terms: dict[int, LaurentPoly] = {}
    position = 0
    while position < len(inner):
        match = _SKEIN_TERM_RE.match(inner, position)
        if match is None:
            raise ParseError(f"termo malformado em {inner[position:]!r}")
        index = int(match.group(1))
        if index < 0 or index in terms:
            raise ParseError(f"índice inválido ou repetido: {index}")
        terms[index] = parse_laurent(match.group(2))
        position = match.end()
        if match.group(3) == "," and position >= len(inner):
            raise ParseError("vírgula final sem termo")
    return SkeinElement(terms)
