"""
Verificações numéricas em raízes da unidade.

Todas as avaliações usam A = exp(pi i / (2(r+1))). Identidades exatas entre
polinômios são verificadas em CableCalculator; aqui ficam as que só valem
na raiz.
"""

from functools import lru_cache

import numpy as np
import structlog

from app.core.exceptions import InvalidParametersError, PreconditionError
from app.core.validators import validate_cable_params, validate_color, validate_prime_modulus, validate_root_order
from app.models.laurent import ComplexValue, LaurentPoly, divide_exact, evaluate_at_root, quantum_integer
from app.models.roots import ParityFunctionPair, RootContext
from app.models.skein import (
    SkeinElement,
    close_in_s3,
    encircle_eigenvalue,
    hopf_pair,
    multiply,
    unknot_value,
)
from app.schemas.skein import CheckResult
from app.services.cable_calculator import CableCalculator

logger = structlog.get_logger(__name__)

LEMMA2_PAIRS = ((2, 3), (3, 2), (2, 5))


@lru_cache(maxsize=8192)
def _quantum_at_root(m: int, r: int) -> ComplexValue:
    return evaluate_at_root(quantum_integer(m), r)


@lru_cache(maxsize=64)
def _omega_unknot_at_root(r: int) -> ComplexValue:
    omega = SkeinElement.from_terms((t, _sign(t) * quantum_integer(t + 1)) for t in range(r))
    return evaluate_at_root(close_in_s3(omega), r)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


class RootOfUnityVerifier:
    """Identidades de omega_r, transição (p, q) <-> (q, p) e somas de cosh."""

    def __init__(self, calculator: CableCalculator | None = None, tolerance: float = 1e-9, lemma2_tolerance: float = 1e-6):
        self.calculator = calculator or CableCalculator()
        self.tolerance = tolerance
        self.lemma2_tolerance = lemma2_tolerance

    def _result(self, name: str, residual: float, tolerance: float, **params: int) -> CheckResult:
        passed = bool(residual < tolerance)
        if not passed:
            logger.warning("verificacao_falhou", identidade=name, residuo=residual, **params)
        return CheckResult(name=name, params=params, passed=passed, residual=float(residual))

    # omega_r ------------------------------------------------------------------

    def omega(self, r: int) -> SkeinElement:
        """omega_r = soma de (-1)^t [t+1] e_t para t = 0..r-1."""
        validate_root_order(r)
        return SkeinElement.from_terms((t, _sign(t) * quantum_integer(t + 1)) for t in range(r))

    def omega_annihilation_check(self, m: int, r: int) -> CheckResult:
        """<e_m, omega_r>_H se anula na raiz para r > m > 0."""
        if not r > m > 0:
            raise PreconditionError(f"exige r > m > 0, recebido m={m}, r={r}")
        value = evaluate_at_root(hopf_pair(SkeinElement.basis(m), self.omega(r)), r)
        return self._result("OMEGA", abs(value), self.tolerance, m=m, r=r)

    def omega_unknot_check(self, r: int) -> CheckResult:
        """<omega_r>_U (A^2 - A^-2)^2 = -2(r+1)."""
        factor = LaurentPoly({2: 1, -2: -1})
        value = evaluate_at_root(close_in_s3(self.omega(r)) * factor * factor, r)
        residual = abs(value + 2 * (r + 1))
        return self._result("OMEGA_U", residual, self.tolerance * (r + 1), r=r)

    def star_check(self, l: int, k: int, r: int) -> CheckResult:  # noqa: E741
        """<e_l e_k, omega_r>_H = delta(l-k) <omega_r>_U na raiz, para r > 2l e r > 2k."""
        validate_color("l", l)
        validate_color("k", k)
        if not (r > 2 * l and r > 2 * k):
            raise PreconditionError(f"exige r > 2l e r > 2k, recebido l={l}, k={k}, r={r}")
        omega = self.omega(r)
        lhs = evaluate_at_root(hopf_pair(multiply(SkeinElement.basis(l), SkeinElement.basis(k)), omega), r)
        rhs = evaluate_at_root(close_in_s3(omega), r) if l == k else 0
        return self._result("STAR", abs(lhs - rhs), self.tolerance, l=l, k=k, r=r)

    # Transição (p, q) <-> (q, p) ------------------------------------------------

    def _canonical_coefficients(self, p: int, q: int, n: int, s: int) -> dict[int, LaurentPoly]:
        """
        Coeficientes g^l(p, q; s) no framing canônico pq.

        (p, q) e (-p, -q) descrevem o mesmo cabo não orientado; (0, 1) é o
        meridiano, que age diagonalmente pelo autovalor de encircle.
        """
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        if p == 0:
            if q != 1:
                raise InvalidParametersError(f"p e q devem ser coprimos: (0, {q})")
            return {s: encircle_eigenvalue(n, s)}
        return dict(self.calculator.theorem2_expand(p, q, n, s).element.items())

    def lemma2_check(self, p: int, q: int, n: int, s: int, l: int, r: int) -> CheckResult:  # noqa: E741
        """
        Compara (-1)^(l+s) g^l(p, q; s) <omega_r> com a soma em t e k de
        (-1)^(k+t) g^k(q, p; t) [(t+1)(l+1)] [(s+1)(k+1)], ambos na raiz.

        Raises:
            PreconditionError: Se as cores l e s não forem menores que r
        """
        validate_root_order(r)
        validate_color("n", n)
        validate_color("s", s)
        validate_color("l", l)
        if l >= r or s >= r:
            raise PreconditionError(f"cores devem ser menores que r={r}: l={l}, s={s}")

        omega_value = _omega_unknot_at_root(r)
        g_left = self._canonical_coefficients(p, q, n, s).get(l, LaurentPoly.zero())
        lhs = _sign(l + s) * evaluate_at_root(g_left, r) * omega_value

        rhs: complex = 0
        for t in range(r):
            outer = _quantum_at_root((t + 1) * (l + 1), r)
            for k, coeff in self._canonical_coefficients(q, p, n, t).items():
                rhs += _sign(k + t) * evaluate_at_root(coeff, r) * outer * _quantum_at_root((s + 1) * (k + 1), r)

        residual = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
        return self._result("LEMMA2", residual, self.lemma2_tolerance, p=p, q=q, n=n, s=s, l=l, r=r)

    # Somas de cosh ----------------------------------------------------------------

    def lemma5_check(self, eta: int, r: int) -> CheckResult:
        """
        Soma de cosh((t+1) eta C) para t = 0..r-1 contra -(1 + cos(eta pi)) / 2.

        Raises:
            PreconditionError: Se r+1 não for primo ou se r+1 dividir eta
        """
        validate_prime_modulus(r)
        if eta % (r + 1) == 0:
            raise PreconditionError(f"eta={eta} é divisível por r+1={r + 1}")
        context = RootContext(r)
        lhs = np.sum(np.cosh(np.arange(1, r + 1) * eta * context.C))
        rhs = -(1 + np.cos(eta * np.pi)) / 2
        return self._result("LEMMA5", abs(lhs - rhs), self.tolerance, eta=eta, r=r)

    def cosh_delta_combination_check(self, l: int, s: int, q: int, k_prime: int, r: int) -> CheckResult:  # noqa: E741
        """
        Soma em t de cosh((t+1)(l+s+2+qk')C) - cosh((t+1)(l-s-qk')C)
        contra -(r+1){delta(l-s-qk') - delta(l+s+2+qk')}.
        """
        validate_prime_modulus(r)
        validate_color("l", l)
        validate_color("s", s)
        low, high = l - s - q * k_prime, l + s + 2 + q * k_prime
        for argument in (low, high):
            if argument and argument % (r + 1) == 0:
                raise PreconditionError(f"argumento {argument} é múltiplo não nulo de r+1={r + 1}")

        context = RootContext(r)
        steps = np.arange(1, r + 1)
        lhs = np.sum(np.cosh(steps * high * context.C) - np.cosh(steps * low * context.C))
        rhs = -(r + 1) * (int(low == 0) - int(high == 0))
        return self._result("COSH", abs(lhs - rhs), self.tolerance, l=l, s=s, q=q, k=k_prime, r=r)

    # Lemas do apêndice ----------------------------------------------------------

    def lemma3_check(self, pair: ParityFunctionPair, t: int, p: int, k_prime: int) -> CheckResult:
        """
        Soma em k >= 0 de f(k+1) g(k+1) {delta(k-t-pk') - delta(k+t+2+pk')}
        contra f(pk'+t+1) g(pk'+t+1).

        Raises:
            ParityError: Se f não for par ou g não for ímpar
        """
        shift = t + p * k_prime
        upper = max(0, shift, -(shift + 2))
        pair.check_parity(range(upper + 3), self.tolerance)

        lhs: complex = 0
        for k in range(upper + 1):
            weight = int(k == shift) - int(k == -(shift + 2))
            if weight:
                lhs += weight * pair.product(k + 1)
        rhs = pair.product(shift + 1)
        residual = abs(lhs - rhs) / max(1.0, abs(rhs))
        return self._result("LEMMA3", residual, self.tolerance, t=t, p=p, k=k_prime)

    def lemma4_check(self, alpha1: complex, alpha2: complex, alpha3: complex, zeta: complex, n: int) -> CheckResult:
        """As somas com (alpha2, alpha3) trocados entre exp e sinh coincidem sobre k' = -N, -N+2, ..., N."""
        validate_color("n", n)
        k = np.arange(-n, n + 1, 2)
        left = np.exp(alpha1 * k**2 + alpha2 * k) * np.sinh(alpha3 * k + zeta)
        right = np.exp(alpha1 * k**2 + alpha3 * k) * np.sinh(alpha2 * k + zeta)
        scale = max(1.0, float(np.sum(np.abs(left))), float(np.sum(np.abs(right))))
        residual = abs(np.sum(left) - np.sum(right)) / scale
        return self._result("LEMMA4", residual, self.tolerance, n=n)

    # Invariantes numéricos --------------------------------------------------------

    def root_evaluate_jones(self, p: int, q: int, n_max: int) -> dict[int, ComplexValue]:
        """
        J_N(T(p, q)) / ((-1)^N [N+1]) em r = N, para N = 1..n_max.

        A divisão é exata e feita antes da substituição, porque [N+1] se anula
        nessa raiz.
        """
        validate_cable_params(p, q)
        table: dict[int, ComplexValue] = {}
        for n in range(1, n_max + 1):
            jones = self.calculator.torus_knot_jones(p, q, n, 0)
            normalized = divide_exact(jones, unknot_value(n))
            table[n] = evaluate_at_root(normalized, n)
        return table

    def path_check(self, p: int, q: int, n: int, s: int, r: int) -> list[CheckResult]:
        """
        Percorre o caminho de torções e trocas até (p, q).

        Torções são conferidas exatamente por lemma1_twist; cada troca é
        conferida por lemma2_check para todas as cores l da expansão de origem.
        """
        results: list[CheckResult] = []
        previous_p, previous_q = 1, 0
        for step in self.calculator.twist_swap_path(p, q):
            if step.kind == "twist":
                source = self.calculator.theorem2_expand(previous_p, previous_q, n, s)
                target = self.calculator.theorem2_expand(step.p, step.q, n, s)
                matched = self.calculator.lemma1_twist(source).element == target.element
                results.append(
                    CheckResult(name="TWIST", params={"p": step.p, "q": step.q}, passed=matched, residual=0.0)
                )
            else:
                for l in range(min(r, previous_p * n + s + 1)):  # noqa: E741
                    results.append(self.lemma2_check(previous_p, previous_q, n, s, l, r))
            previous_p, previous_q = step.p, step.q
        return results

    # Grades ---------------------------------------------------------------------

    def omega_grid(self, r: int) -> list[CheckResult]:
        results = [self.omega_annihilation_check(m, r) for m in range(1, r)]
        results.append(self.omega_unknot_check(r))
        return results

    def star_grid(self, r: int) -> list[CheckResult]:
        bound = (r - 1) // 2
        return [self.star_check(l, k, r) for l in range(bound + 1) for k in range(bound + 1)]  # noqa: E741

    def lemma2_grid(self, r: int, n_max: int = 2, s_max: int = 2, l_max: int = 8) -> list[CheckResult]:
        results = [
            self.lemma2_check(1, 0, n, s, l, r)
            for n in range(n_max + 1)
            for s in range(min(s_max, r - 1) + 1)
            for l in range(min(l_max, r - 1) + 1)  # noqa: E741
        ]
        for p, q in LEMMA2_PAIRS:
            for n in range(n_max + 1):
                for s in range(min(s_max, r - 1) + 1):
                    for l in range(min(l_max, r - 1) + 1):  # noqa: E741
                        results.append(self.lemma2_check(p, q, n, s, l, r))
        return results

    def lemma5_grid(self, r: int) -> list[CheckResult]:
        validate_prime_modulus(r)
        return [self.lemma5_check(eta, r) for eta in range(1, 2 * r + 1) if eta % (r + 1)]

    def cosh_grid(self, r: int, l_max: int = 4, s_max: int = 3, q_max: int = 3, k_max: int = 2) -> list[CheckResult]:
        """Combinações cosh/delta; pontos que violam a pré-condição são pulados."""
        validate_prime_modulus(r)
        results: list[CheckResult] = []
        for l in range(l_max + 1):  # noqa: E741
            for s in range(s_max + 1):
                for q in range(-q_max, q_max + 1):
                    for k_prime in range(-k_max, k_max + 1):
                        try:
                            results.append(self.cosh_delta_combination_check(l, s, q, k_prime, r))
                        except PreconditionError:
                            continue
        return results

    def lemma3_grid(self, seed: int = 0, count: int = 200) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        results: list[CheckResult] = []
        for _ in range(count):
            even = rng.integers(-3, 4, size=int(rng.integers(1, 4))).astype(float)
            odd = rng.integers(-3, 4, size=int(rng.integers(1, 4))).astype(float)
            pair = ParityFunctionPair.from_polynomials(even, odd)
            t = int(rng.integers(-5, 6))
            p = int(rng.integers(1, 6))
            k_prime = int(rng.integers(-3, 4))
            results.append(self.lemma3_check(pair, t, p, k_prime))
        return results

    def lemma4_grid(self, seed: int = 0, count: int = 200, n_max: int = 8) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        results: list[CheckResult] = []
        for _ in range(count):
            alpha1, alpha2, alpha3, zeta = rng.uniform(-0.5, 0.5, size=4) + 1j * rng.uniform(-0.5, 0.5, size=4)
            n = int(rng.integers(0, n_max + 1))
            results.append(self.lemma4_check(complex(alpha1), complex(alpha2), complex(alpha3), complex(zeta), n))
        return results
