"""Serviço de expansão de cabos no toro sólido."""

from collections.abc import Mapping

import structlog

from app.core.exceptions import InvalidParametersError, MissingColorError
from app.core.validators import validate_cable_params, validate_color
from app.models.cable import CableExpansion, ContinuedFraction, PathStep, TorusDecomposition
from app.models.laurent import LaurentPoly
from app.models.skein import SkeinElement, close_in_s3, framing_phase
from app.schemas.skein import CableParams

logger = structlog.get_logger(__name__)


class CableCalculator:
    """
    Calcula T_sigma(p, q; s) e seus coeficientes g^l.

    Todas as expansões internas usam o framing canônico sigma = pq; qualquer
    outro framing é obtido somente por framing_adjust.
    """

    def theorem2_expand(self, p: int, q: int, n: int, s: int) -> CableExpansion:
        """
        Forma fechada de T(p, q; s) no framing pq.

        Args:
            p: Voltas longitudinais (p > 0)
            q: Voltas meridionais (coprimo com p)
            n: Cor do cabo
            s: Cor da alma

        Returns:
            Soma de (-1)^(qn) A^(pqk^2 + 2qk(s+1)) e_(pk+s) para k = -n, -n+2, ..., n

        Raises:
            InvalidParametersError: Se p <= 0 ou p, q não forem coprimos
        """
        params = validate_cable_params(p, q, n, s)
        sign = -1 if (q * n) % 2 else 1
        terms = (
            (p * k + s, LaurentPoly.monomial(p * q * k * k + 2 * q * k * (s + 1), sign)) for k in range(-n, n + 1, 2)
        )
        return CableExpansion(params=params, element=SkeinElement.from_terms(terms))

    def torus_decomposition(self, p: int, q: int) -> TorusDecomposition:
        validate_cable_params(p, q)
        epsilon, beta = divmod(q, p)
        return TorusDecomposition(epsilon=epsilon, beta=beta, alpha=p * beta)

    def theorem1_coeff(self, p: int, q: int, n: int, s: int, l: int) -> LaurentPoly:  # noqa: E741
        """
        Coeficiente g^l(p, q; s) no framing pq, pela soma com deltas.

        No máximo dois termos da soma em k são não nulos.
        """
        validate_cable_params(p, q, n, s)
        validate_color("l", l)
        decomposition = self.torus_decomposition(p, q)

        total = LaurentPoly.zero()
        for k in range(-n, n + 1, 2):
            weight = int(l - s - p * k == 0) - int(l + s + 2 + p * k == 0)
            if weight:
                exponent = decomposition.alpha * k * k + 2 * decomposition.beta * k * (s + 1)
                total = total + LaurentPoly.monomial(exponent, weight)
        if total.is_zero:
            return total

        sign = -1 if (q * n) % 2 else 1
        return sign * total.shift(decomposition.epsilon * (l * l + 2 * l - s * s - 2 * s))

    def theorem1_expand(self, p: int, q: int, n: int, s: int) -> CableExpansion:
        """Reúne os coeficientes g^l para l = 0..pn+s em um SkeinElement."""
        params = validate_cable_params(p, q, n, s)
        terms = ((l, self.theorem1_coeff(p, q, n, s, l)) for l in range(p * n + s + 1))  # noqa: E741
        return CableExpansion(params=params, element=SkeinElement.from_terms(terms))

    def framing_adjust(self, x: CableExpansion, b: int) -> CableExpansion:
        """Multiplica tudo pela fase global (-1)^(bN) A^(b(N^2+2N)) e soma b ao framing."""
        phase = framing_phase(x.params.n, b)
        params = x.params.model_copy(update={"sigma": x.sigma + b})
        return CableExpansion(params=params, element=x.element.scale(phase))

    def expand(self, params: CableParams) -> CableExpansion:
        """Expansão no framing pedido em params (canônico quando sigma é None)."""
        expansion = self.theorem2_expand(params.p, params.q, params.n, params.s)
        if params.sigma is None:
            return expansion
        return self.framing_adjust(expansion, params.sigma - params.canonical_framing)

    def lemma1_twist(self, x: CableExpansion) -> CableExpansion:
        """
        Leva a expansão de (p, q) na de (p, q+p) aplicando a fase de cada l.

        Raises:
            InvalidParametersError: Se a entrada não estiver no framing canônico pq
        """
        params = x.params
        if x.sigma != params.canonical_framing:
            raise InvalidParametersError(
                f"lemma1_twist exige framing canônico {params.canonical_framing}, recebido {x.sigma}"
            )
        s = params.s

        def phase(l: int, coeff: LaurentPoly) -> LaurentPoly:  # noqa: E741
            sign = -1 if (l + s) % 2 else 1
            return coeff * LaurentPoly.monomial(l * l + 2 * l - s * s - 2 * s, sign)

        twisted = validate_cable_params(params.p, params.q + params.p, params.n, s)
        return CableExpansion(params=twisted, element=x.element.map_coefficients(phase))

    def continued_fraction(self, p: int, q: int) -> ContinuedFraction:
        """Fração contínua de q/p pelo algoritmo de Euclides (divisão com piso)."""
        if p <= 0:
            raise InvalidParametersError(f"p deve ser > 0, recebido {p}")
        terms: list[int] = []
        numerator, denominator = q, p
        while denominator:
            term = numerator // denominator
            terms.append(term)
            numerator, denominator = denominator, numerator - term * denominator
        return ContinuedFraction(terms=tuple(terms))

    def twist_swap_path(self, p: int, q: int) -> list[PathStep]:
        """
        Caminho de (1, 0) até (p, q) por torções (q -> q+p) e trocas (p <-> q).

        Cada torção é uma aplicação de lemma1_twist; cada troca é a transição
        verificada numericamente no módulo de raízes.
        """
        validate_cable_params(p, q)
        if q < 0:
            raise InvalidParametersError("o caminho de torções exige q >= 0")
        terms = self.continued_fraction(p, q).terms

        steps: list[PathStep] = []
        current_p, current_q = 1, 0
        for index, term in enumerate(reversed(terms)):
            if index:
                current_p, current_q = current_q, current_p
                steps.append(PathStep(kind="swap", p=current_p, q=current_q))
            for _ in range(term):
                current_q += current_p
                steps.append(PathStep(kind="twist", p=current_p, q=current_q))
        return steps

    def satellite_evaluate(self, x: CableExpansion, companion: Mapping[int, LaurentPoly]) -> LaurentPoly:
        """
        Soma g^l J_l sobre o suporte da expansão.

        Raises:
            MissingColorError: Se o companheiro não tiver alguma cor necessária
        """
        missing = [l for l in x.element.support if l not in companion]  # noqa: E741
        if missing:
            raise MissingColorError(f"cores ausentes na tabela do companheiro: {missing}")
        result = LaurentPoly.zero()
        for l, coeff in x.element.items():  # noqa: E741
            result = result + coeff * companion[l]
        return result

    def torus_knot_jones(self, p: int, q: int, n: int, target_framing: int = 0) -> LaurentPoly:
        """Fecha T(p, q; 0) em S^3 e corrige o framing de pq para target_framing."""
        expansion = self.theorem2_expand(p, q, n, 0)
        value = close_in_s3(expansion.element) * framing_phase(n, target_framing - p * q)
        logger.debug("jones_toro_calculado", p=p, q=q, n=n, framing=target_framing, termos=len(value))
        return value

    def iterated_cable(
        self, outer: CableParams, inner: CableParams, companion: Mapping[int, LaurentPoly]
    ) -> LaurentPoly:
        """
        Invariante de um cabo de um cabo.

        A expansão externa (no framing outer.framing) produz cores l; cada e_l
        vive no nó-cabo interno, que é expandido com cor l (inner.n é ignorado)
        no framing inner.framing e avaliado no companheiro.

        Raises:
            InvalidParametersError: Se alguma das almas estiver colorida
        """
        if outer.s or inner.s:
            raise InvalidParametersError("cabo iterado exige almas sem cor (s = 0)")
        result = LaurentPoly.zero()
        for l, coeff in self.expand(outer).element.items():  # noqa: E741
            inner_expansion = self.expand(inner.model_copy(update={"n": l}))
            result = result + coeff * self.satellite_evaluate(inner_expansion, companion)
        return result
