"""Geração de diagramas: fechos de tranças no anel e cabos paralelos de quadro-negro."""

from collections.abc import Mapping, Sequence
from itertools import count

import structlog

from app.core.exceptions import InvalidParametersError, UnorientedDiagramError
from app.models.diagram import Diagram

logger = structlog.get_logger(__name__)


class DiagramBuilder:
    """Constrói diagramas orientados no anel a partir de palavras de trança."""

    def braid_closure_diagram(self, strands: int, word: Sequence[int]) -> Diagram:
        """
        Fecho no anel de uma trança.

        As posições crescem do buraco para fora e a trança percorre o anel no
        sentido anti-horário. A letra +i é o gerador positivo sigma_i entre as
        posições i e i+1; -i é o seu inverso. O raio base corta o diagrama na
        costura do fecho, uma vez por fio.

        Args:
            strands: Número de fios (>= 1)
            word: Letras não nulas com |letra| < strands

        Returns:
            Diagram no anel, orientado, com um cruzamento por letra
        """
        if strands < 1:
            raise InvalidParametersError(f"número de fios deve ser >= 1, recebido {strands}")
        for letter in word:
            if letter == 0 or abs(letter) >= strands:
                raise InvalidParametersError(f"letra inválida {letter} para {strands} fios")

        ids = count(strands)
        start = list(range(strands))
        current = list(start)
        crossings: list[tuple[int, int, int, int]] = []
        orientations: list[int] = []

        for letter in word:
            left = abs(letter) - 1
            e_left, e_right = current[left], current[left + 1]
            f_left, f_right = next(ids), next(ids)
            if letter > 0:
                # ramo inferior: direita -> esquerda; superior: esquerda -> direita
                crossings.append((e_right, f_right, f_left, e_left))
                orientations.append(1)
            else:
                crossings.append((e_left, e_right, f_right, f_left))
                orientations.append(-1)
            current[left], current[left + 1] = f_left, f_right

        seam = {start[pos]: current[pos] for pos in range(strands) if start[pos] != current[pos]}
        free_loops = tuple(1 for pos in range(strands) if start[pos] == current[pos])
        closed = [tuple(seam.get(e, e) for e in crossing) for crossing in crossings]

        relabel = {e: index for index, e in enumerate(sorted({e for crossing in closed for e in crossing}))}
        return Diagram(
            crossings=tuple(tuple(relabel[e] for e in crossing) for crossing in closed),
            free_loops=free_loops,
            annular=True,
            ray_cuts={relabel[e]: 1 for e in seam.values()},
            orientations=tuple(orientations),
        )

    def torus_braid_diagram(self, p: int, q: int) -> Diagram:
        """Fecho de (sigma_1 ... sigma_(p-1))^q em p fios; q < 0 usa cruzamentos espelhados."""
        if p < 1:
            raise InvalidParametersError(f"p deve ser >= 1, recebido {p}")
        sign = 1 if q >= 0 else -1
        word = [sign * (i + 1) for _ in range(abs(q)) for i in range(p - 1)]
        return self.braid_closure_diagram(p, word)

    def parallel_cable(self, d: Diagram, j: int | Mapping[int, int]) -> Diagram:
        """
        Substitui cada componente por cópias paralelas no quadro-negro.

        A cópia k de uma aresta fica k posições à esquerda do sentido da
        aresta; cada cruzamento vira uma grade de j_inferior x j_superior
        cruzamentos com o mesmo sinal.

        Args:
            d: Diagrama (orientado, se tiver cruzamentos)
            j: Multiplicidade única ou tabela componente -> multiplicidade

        Returns:
            Diagrama cabeado; j = 0 produz o diagrama vazio
        """
        components = d.components()
        if isinstance(j, int):
            multiplicity = dict.fromkeys(range(len(components)), j)
        else:
            multiplicity = {index: j.get(index, -1) for index in range(len(components))}
        if any(m < 0 for m in multiplicity.values()):
            raise InvalidParametersError(f"multiplicidades devem cobrir todas as componentes com valores >= 0: {j}")
        if all(m == 1 for m in multiplicity.values()):
            return d
        if d.crossings and not d.is_oriented:
            raise UnorientedDiagramError("cabo paralelo exige diagrama orientado")

        owner = d.component_of_edges()
        loop_offset = len(components) - len(d.free_loops)
        ids = count()
        parent: dict[int, int] = {}

        def new_edge() -> int:
            edge = next(ids)
            parent[edge] = edge
            return edge

        def find(e: int) -> int:
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        def merge(x: int, y: int) -> None:
            root_x, root_y = find(x), find(y)
            if root_x != root_y:
                parent[max(root_x, root_y)] = min(root_x, root_y)

        outer: dict[tuple[int, int], int] = {}
        ray: dict[int, int] = {}
        for e in d.edges:
            for k in range(multiplicity[owner[e]]):
                outer[(e, k)] = new_edge()
                ray[outer[(e, k)]] = d.ray_cuts.get(e, 0)

        crossings: list[tuple[int, int, int, int]] = []
        orientations: list[int] = []
        signs = d.orientations or ()
        for (a, b, c, dd), sign in zip(d.crossings, signs, strict=False):
            ju, jo = multiplicity[owner[a]], multiplicity[owner[b]]
            if ju == 0 or jo == 0:
                for k in range(ju):
                    merge(outer[(a, k)], outer[(c, k)])
                for m in range(jo):
                    merge(outer[(dd, m)], outer[(b, m)])
                continue

            vertical = {(k, m): new_edge() for k in range(ju) for m in range(jo)}
            horizontal = {(m, k): new_edge() for m in range(jo) for k in range(ju)}
            for k in range(ju):
                for m in range(jo):
                    if sign == 1:
                        under_in = outer[(a, k)] if m == 0 else vertical[(k, m - 1)]
                        under_out = outer[(c, k)] if m == jo - 1 else vertical[(k, m)]
                    else:
                        under_in = outer[(a, k)] if m == jo - 1 else vertical[(k, m + 1)]
                        under_out = outer[(c, k)] if m == 0 else vertical[(k, m)]
                    east = outer[(b, m)] if k == 0 else horizontal[(m, k)]
                    west = outer[(dd, m)] if k == ju - 1 else horizontal[(m, k + 1)]
                    crossings.append((under_in, east, under_out, west))
                    orientations.append(sign)

        merged_ray: dict[int, int] = {}
        for edge, value in ray.items():
            root = find(edge)
            merged_ray[root] = merged_ray.get(root, 0) + value

        closed = [tuple(find(e) for e in crossing) for crossing in crossings]
        used = {e for crossing in closed for e in crossing}
        relabel: dict[int, int] = {}
        for crossing in closed:
            for e in crossing:
                relabel.setdefault(e, len(relabel))

        free_loops: list[int] = []
        for root in sorted({find(e) for e in outer.values()} - used):
            free_loops.append(merged_ray.get(root, 0))
        for index, rc in enumerate(d.free_loops):
            free_loops.extend([rc] * multiplicity[loop_offset + index])

        cabled = Diagram(
            crossings=tuple(tuple(relabel[e] for e in crossing) for crossing in closed),
            free_loops=tuple(free_loops),
            annular=d.annular,
            ray_cuts={relabel[e]: merged_ray.get(e, 0) for e in used} if d.annular else {},
            orientations=tuple(orientations),
        )
        logger.debug("cabo_paralelo_gerado", cruzamentos=cabled.num_crossings, lacos_livres=len(free_loops))
        return cabled

    def planar_projection(self, d: Diagram) -> Diagram:
        """Esquece o buraco do anel: o mesmo diagrama visto em S^3."""
        return Diagram(
            crossings=d.crossings,
            free_loops=tuple(0 for _ in d.free_loops),
            annular=False,
            orientations=d.orientations,
        )
