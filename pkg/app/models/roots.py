"""Valores do módulo de raízes da unidade."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from app.core.exceptions import ParityError
from app.core.validators import validate_root_order
from app.models.laurent import ComplexValue, LaurentPoly, evaluate_at_root, root_of_unity

IntFunction = Callable[[int], complex]


@dataclass(frozen=True)
class RootContext:
    """Ponto de avaliação A = exp(pi i / (2(r+1))) e a constante C = pi i / (r+1)."""

    r: int

    def __post_init__(self) -> None:
        validate_root_order(self.r)

    @property
    def A(self) -> ComplexValue:  # noqa: N802
        return root_of_unity(self.r)

    @property
    def C(self) -> ComplexValue:  # noqa: N802
        return complex(0, math.pi / (self.r + 1))

    def evaluate(self, poly: LaurentPoly) -> ComplexValue:
        return evaluate_at_root(poly, self.r)


@dataclass(frozen=True)
class ParityFunctionPair:
    """Par (f, g) com f par e g ímpar nos inteiros."""

    f: IntFunction
    g: IntFunction

    @classmethod
    def from_polynomials(cls, even_coeffs: Sequence[float], odd_coeffs: Sequence[float]) -> ParityFunctionPair:
        """
        f(x) = soma a_i x^(2i) e g(x) = soma b_i x^(2i+1).

        Args:
            even_coeffs: Coeficientes a_i das potências pares
            odd_coeffs: Coeficientes b_i das potências ímpares
        """
        even = np.zeros(2 * len(even_coeffs) or 1)
        even[::2][: len(even_coeffs)] = even_coeffs
        odd = np.zeros(2 * len(odd_coeffs) + 1)
        odd[1::2] = odd_coeffs
        f_poly, g_poly = Polynomial(even), Polynomial(odd)
        return cls(f=lambda x: complex(f_poly(x)), g=lambda x: complex(g_poly(x)))

    @classmethod
    def from_hyperbolic(cls, a: complex, b: complex) -> ParityFunctionPair:
        """f(x) = cosh(a x), g(x) = sinh(b x)."""
        return cls(f=lambda x: complex(np.cosh(a * x)), g=lambda x: complex(np.sinh(b * x)))

    def product(self, x: int) -> complex:
        return self.f(x) * self.g(x)

    def check_parity(self, points: Iterable[int], tolerance: float = 1e-9) -> None:
        """
        Confere f(-x) = f(x), g(-x) = -g(x) e g(0) = 0.

        Raises:
            ParityError: No primeiro ponto que violar a paridade
        """
        if abs(self.g(0)) > tolerance:
            raise ParityError(f"g(0) = {self.g(0)} não é zero")
        for x in points:
            scale = max(1.0, abs(self.f(x)), abs(self.g(x)))
            if abs(self.f(-x) - self.f(x)) > tolerance * scale:
                raise ParityError(f"f não é par em x={x}")
            if abs(self.g(-x) + self.g(x)) > tolerance * scale:
                raise ParityError(f"g não é ímpar em x={x}")
