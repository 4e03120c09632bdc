"""
Diagramas combinatórios de enlaces (planares ou no anel) em convenção PD.

Cada cruzamento é uma 4-tupla (a, b, c, d) de arestas em ordem anti-horária a
partir do ramo inferior de entrada: o ramo inferior vai de a para c e o
superior liga b e d. ``orientations[i]`` fixa o sentido do ramo superior:
+1 quando ele vai de d para b (cruzamento positivo), -1 de b para d.

Em diagramas no anel, ``ray_cuts[e]`` conta com sinal quantas vezes a aresta
e, percorrida no sentido da orientação, cruza um raio fixo que sai do buraco
do anel. ``free_loops`` lista os laços sem cruzamentos pelo seu ray cut.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

from app.core.exceptions import DiagramError, InvalidAnnularDataError, UnorientedDiagramError

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: tuple[int, ...] = ()
    annular: bool = False
    ray_cuts: Mapping[int, int] = field(default_factory=dict)
    orientations: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        crossings = tuple(tuple(int(e) for e in crossing) for crossing in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "free_loops", tuple(int(rc) for rc in self.free_loops))
        object.__setattr__(self, "ray_cuts", {int(e): int(rc) for e, rc in self.ray_cuts.items() if rc})
        if self.orientations is not None:
            object.__setattr__(self, "orientations", tuple(int(o) for o in self.orientations))
        self._validate()

    def _validate(self) -> None:
        for crossing in self.crossings:
            if len(crossing) != 4:
                raise DiagramError(f"cruzamento deve ter 4 arestas: {crossing}")

        counts = Counter(e for crossing in self.crossings for e in crossing)
        wrong = sorted(e for e, count in counts.items() if count != 2)
        if wrong:
            raise DiagramError(f"arestas que não aparecem exatamente duas vezes: {wrong}")

        if not self.annular:
            if self.ray_cuts or any(self.free_loops):
                raise DiagramError("diagrama planar não pode ter dados de raio")
        else:
            unknown = sorted(set(self.ray_cuts) - set(counts))
            if unknown:
                raise DiagramError(f"ray_cuts referencia arestas inexistentes: {unknown}")
            if any(abs(rc) > 1 for rc in self.free_loops):
                raise InvalidAnnularDataError("laço livre com enrolamento fora de {-1, 0, 1}")

        if self.orientations is not None:
            if len(self.orientations) != len(self.crossings):
                raise DiagramError("orientations deve ter um valor por cruzamento")
            if any(o not in (1, -1) for o in self.orientations):
                raise DiagramError("orientations aceita apenas +1 ou -1")
            tails = Counter(
                crossing[slot]
                for index, crossing in enumerate(self.crossings)
                for slot in range(4)
                if self.slot_is_outgoing(index, slot)
            )
            if any(tails[e] != 1 for e in counts):
                raise DiagramError("orientação inconsistente: cada aresta precisa de uma saída e uma entrada")

    @property
    def edges(self) -> list[int]:
        return sorted({e for crossing in self.crossings for e in crossing})

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def is_empty(self) -> bool:
        return not self.crossings and not self.free_loops

    @property
    def is_oriented(self) -> bool:
        return self.orientations is not None

    def slot_is_outgoing(self, index: int, slot: int) -> bool:
        """Indica se a aresta no slot deixa o cruzamento (exige orientação)."""
        if self.orientations is None:
            raise UnorientedDiagramError("diagrama sem orientação")
        if slot == 0:
            return False
        if slot == 2:
            return True
        over_forward = self.orientations[index] == 1
        return over_forward if slot == 1 else not over_forward

    def components(self) -> list[tuple[int, ...]]:
        """
        Componentes do enlace como tuplas de arestas.

        Componentes com cruzamentos vêm primeiro, ordenadas pela menor aresta;
        cada laço livre é uma componente vazia ao final, na ordem listada.
        """
        parent = {e: e for e in self.edges}

        def find(e: int) -> int:
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for a, b, c, d in self.crossings:
            for x, y in ((a, c), (b, d)):
                root_x, root_y = find(x), find(y)
                if root_x != root_y:
                    parent[max(root_x, root_y)] = min(root_x, root_y)

        groups: dict[int, list[int]] = {}
        for e in self.edges:
            groups.setdefault(find(e), []).append(e)
        ordered = [tuple(groups[root]) for root in sorted(groups)]
        return ordered + [() for _ in self.free_loops]

    def component_of_edges(self) -> dict[int, int]:
        return {e: index for index, component in enumerate(self.components()) for e in component}

    def writhe(self, component: int | None = None) -> int:
        """
        Soma dos sinais dos cruzamentos.

        Args:
            component: Se informado, conta apenas cruzamentos da componente consigo mesma
                (o framing de quadro-negro dessa componente)

        Raises:
            UnorientedDiagramError: Se o diagrama não tiver orientação
        """
        if self.orientations is None:
            raise UnorientedDiagramError("writhe exige diagrama orientado")
        if component is None:
            return sum(self.orientations)
        owner = self.component_of_edges()
        return sum(
            sign
            for (a, b, _c, _d), sign in zip(self.crossings, self.orientations, strict=True)
            if owner[a] == component and owner[b] == component
        )


EMPTY_DIAGRAM = Diagram(annular=True)


def diagram_writhe(d: Diagram, component: int | None = None) -> int:
    return d.writhe(component)
