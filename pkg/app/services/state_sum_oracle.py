"""
Oráculo por força bruta: somas de estados do colchete de Kauffman.

Convenção de suavização para o cruzamento PD (a, b, c, d): a suavização A
liga (a, b) e (c, d); a suavização B liga (a, d) e (b, c). Com ela o fecho
positivo de (sigma_1)^3 é o trevo de mão direita.
"""

import itertools
from collections import Counter
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import structlog

from app.core.exceptions import CrossingBudgetError, DiagramError, InvalidAnnularDataError, UnorientedDiagramError
from app.core.validators import validate_cable_params, validate_color
from app.models.diagram import Diagram
from app.models.laurent import DELTA, LaurentPoly
from app.models.skein import SkeinElement, ZPolynomial, e_basis_in_z, framing_phase, z_to_e
from app.services.cable_calculator import CableCalculator
from app.services.diagram_builder import DiagramBuilder

logger = structlog.get_logger(__name__)

StateKey = tuple[int, int, int]  # (suavizações B, laços triviais, laços essenciais)


@dataclass(frozen=True)
class _StateTables:
    crossings: int
    edge_partner: tuple[int, ...]
    edge_winding: tuple[int, ...]


@dataclass(frozen=True)
class TorusVerification:
    p: int
    q: int
    n: int
    oracle: SkeinElement
    formula: SkeinElement

    @property
    def passed(self) -> bool:
        return self.oracle == self.formula


def _build_tables(d: Diagram) -> _StateTables:
    positions: dict[int, list[int]] = {}
    for index, crossing in enumerate(d.crossings):
        for slot, e in enumerate(crossing):
            positions.setdefault(e, []).append(4 * index + slot)

    size = 4 * d.num_crossings
    partner = [0] * size
    winding = [0] * size
    needs_orientation = d.annular and any(d.ray_cuts.values())
    if needs_orientation and not d.is_oriented:
        raise UnorientedDiagramError("dados de raio exigem diagrama orientado")

    for e, (first, second) in positions.items():
        partner[first], partner[second] = second, first
        cut = d.ray_cuts.get(e, 0) if d.annular else 0
        if cut:
            first_is_tail = d.slot_is_outgoing(first // 4, first % 4)
            winding[first] = cut if first_is_tail else -cut
            winding[second] = -winding[first]
    return _StateTables(crossings=d.num_crossings, edge_partner=tuple(partner), edge_winding=tuple(winding))


def _count_states(tables: _StateTables, start: int, stop: int) -> dict[StateKey, int]:
    """Enumera os estados em [start, stop) e conta por (B, triviais, essenciais)."""
    partner = tables.edge_partner
    winding = tables.edge_winding
    size = len(partner)
    counts: Counter[StateKey] = Counter()

    for state in range(start, stop):
        visited = bytearray(size)
        trivial = essential = 0
        for origin in range(size):
            if visited[origin]:
                continue
            total = 0
            endpoint = origin
            while True:
                visited[endpoint] = 1
                total += winding[endpoint]
                other = partner[endpoint]
                visited[other] = 1
                index, slot = divmod(other, 4)
                endpoint = 4 * index + ((3 - slot) if (state >> index) & 1 else (slot ^ 1))
                if endpoint == origin:
                    break
            if total == 0:
                trivial += 1
            elif total in (1, -1):
                essential += 1
            else:
                raise InvalidAnnularDataError(f"laço com enrolamento {total} no estado {state}")
        counts[(state.bit_count(), trivial, essential)] += 1
    return dict(counts)


class StateSumOracle:
    """
    Avalia diagramas somando as 2^c resoluções.

    O resultado é acumulado em contagens inteiras e montado em forma canônica,
    então é idêntico bit a bit para qualquer número de processos.
    """

    def __init__(
        self,
        max_crossings: int = 26,
        workers: int = 1,
        parallel_min_states: int = 4096,
        builder: DiagramBuilder | None = None,
        calculator: CableCalculator | None = None,
    ):
        self.max_crossings = max_crossings
        self.workers = workers
        self.parallel_min_states = parallel_min_states
        self.builder = builder or DiagramBuilder()
        self.calculator = calculator or CableCalculator()

    def _check_budget(self, crossings: int) -> None:
        if crossings > self.max_crossings:
            raise CrossingBudgetError(
                f"{crossings} cruzamentos excedem o limite de {self.max_crossings} (2^{crossings} estados)"
            )

    def _state_sum(self, d: Diagram) -> ZPolynomial:
        self._check_budget(d.num_crossings)
        tables = _build_tables(d)
        total_states = 1 << d.num_crossings

        if self.workers > 1 and total_states >= self.parallel_min_states:
            chunks = self.workers * 4
            bounds = [total_states * i // chunks for i in range(chunks + 1)]
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                partials = list(pool.map(_count_states, [tables] * chunks, bounds[:-1], bounds[1:]))
        else:
            partials = [_count_states(tables, 0, total_states)]

        counts: Counter[StateKey] = Counter()
        for partial in partials:
            counts.update(partial)
        logger.debug("soma_de_estados", cruzamentos=d.num_crossings, estados=total_states, workers=self.workers)

        free_trivial = sum(1 for rc in d.free_loops if rc == 0)
        free_essential = len(d.free_loops) - free_trivial
        delta_powers: dict[int, LaurentPoly] = {}
        acc: dict[int, LaurentPoly] = {}
        for (b_count, trivial, essential), multiplicity in sorted(counts.items()):
            loops = trivial + free_trivial
            if loops not in delta_powers:
                delta_powers[loops] = DELTA**loops
            term = delta_powers[loops].shift(d.num_crossings - 2 * b_count) * multiplicity
            degree = essential + free_essential
            acc[degree] = acc.get(degree, LaurentPoly.zero()) + term
        return ZPolynomial(acc)

    def kauffman_bracket(self, d: Diagram) -> LaurentPoly:
        """
        Colchete de um diagrama planar; cada laço vale delta = -A^2 - A^-2 e o vazio vale 1.

        Raises:
            DiagramError: Se o diagrama estiver no anel
            CrossingBudgetError: Acima do limite de cruzamentos
        """
        if d.annular:
            raise DiagramError("kauffman_bracket exige diagrama planar")
        return self._state_sum(d).coefficient(0)

    def annulus_bracket(self, d: Diagram) -> ZPolynomial:
        """Colchete no anel: laços triviais valem delta e cada laço essencial vale z."""
        if not d.annular:
            raise DiagramError("annulus_bracket exige diagrama no anel")
        return self._state_sum(d)

    def colored_annulus_bracket(
        self, d: Diagram, n: int, component_colors: Mapping[int, int] | None = None
    ) -> SkeinElement:
        """
        Avaliação colorida via base z: e_N = soma a_j z^j e z^j = j cópias paralelas.

        Args:
            d: Diagrama no anel
            n: Cor das componentes sem cor explícita
            component_colors: Cores por componente (índices de Diagram.components())

        Returns:
            Elemento de S(D x S^1) no framing de quadro-negro de cada componente
        """
        if not d.annular:
            raise DiagramError("colored_annulus_bracket exige diagrama no anel")
        validate_color("n", n)
        components = d.components()
        colors = [(component_colors or {}).get(index, n) for index in range(len(components))]
        for color in colors:
            validate_color("cor de componente", color)

        owner = d.component_of_edges()
        heaviest = sum(colors[owner[a]] * colors[owner[b]] for a, b, _c, _d in d.crossings)
        self._check_budget(heaviest)

        expansions = [sorted(e_basis_in_z(color).items()) for color in colors]
        total = ZPolynomial()
        for choice in itertools.product(*expansions):
            weight = 1
            for _degree, coeff in choice:
                weight *= coeff
            multiplicity = {index: degree for index, (degree, _coeff) in enumerate(choice)}
            cabled = self.builder.parallel_cable(d, multiplicity)
            total = total + self.annulus_bracket(cabled) * weight
        return z_to_e(total)

    def diagram_writhe(self, d: Diagram, component: int | None = None) -> int:
        return d.writhe(component)

    def verify_torus(self, p: int, q: int, n: int) -> TorusVerification:
        """
        Compara o oráculo com a forma fechada de T(p, q; 0).

        O fecho da trança tem framing de quadro-negro q(p-1); o resultado é
        levado ao framing canônico pq pela fase global da cor n.
        """
        validate_cable_params(p, q, n)
        diagram = self.builder.torus_braid_diagram(p, q)
        self._check_budget(diagram.num_crossings * n * n)

        raw = self.colored_annulus_bracket(diagram, n)
        corrected = raw.scale(framing_phase(n, p * q - diagram.writhe()))
        formula = self.calculator.theorem2_expand(p, q, n, 0).element
        result = TorusVerification(p=p, q=q, n=n, oracle=corrected, formula=formula)
        if result.passed:
            logger.info("oraculo_confere", p=p, q=q, n=n)
        else:
            logger.warning("oraculo_diverge", p=p, q=q, n=n)
        return result
