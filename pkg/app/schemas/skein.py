"""Schemas Pydantic para parâmetros validados e formatos de arquivo."""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.models.diagram import Diagram
from app.models.laurent import LaurentPoly, format_laurent, parse_laurent


class CableParams(BaseModel):
    """Parâmetros de um cabo (p, q) colorido ao redor da alma do toro sólido."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., gt=0, description="Voltas longitudinais do cabo")
    q: int = Field(..., description="Voltas meridionais do cabo")
    n: int = Field(0, ge=0, description="Cor N do cabo")
    s: int = Field(0, ge=0, description="Cor da alma")
    sigma: int | None = Field(None, description="Framing do cabo; None usa o canônico p*q")

    @model_validator(mode="after")
    def _check_coprime(self) -> "CableParams":
        if math.gcd(self.p, abs(self.q)) != 1:
            raise ValueError(f"p e q devem ser coprimos: ({self.p}, {self.q})")
        return self

    @property
    def canonical_framing(self) -> int:
        return self.p * self.q

    @property
    def framing(self) -> int:
        return self.canonical_framing if self.sigma is None else self.sigma


class DiagramFile(BaseModel):
    """Arquivo de diagrama (JSON). Campos desconhecidos são rejeitados."""

    model_config = ConfigDict(extra="forbid")

    annular: bool = Field(False, description="Diagrama no anel (True) ou no plano")
    crossings: list[tuple[int, int, int, int]] = Field(default_factory=list, description="Cruzamentos PD")
    free_loops: list[int] = Field(default_factory=list, description="Ray cut de cada laço sem cruzamento")
    ray_cuts: dict[int, int] = Field(default_factory=dict, description="Aresta -> cortes com sinal no raio base")
    orientations: list[int] | None = Field(None, description="Sentido do ramo superior por cruzamento (+1: d->b)")

    def to_diagram(self) -> Diagram:
        return Diagram(
            crossings=tuple(self.crossings),
            free_loops=tuple(self.free_loops),
            annular=self.annular,
            ray_cuts=self.ray_cuts,
            orientations=None if self.orientations is None else tuple(self.orientations),
        )

    @classmethod
    def from_diagram(cls, diagram: Diagram) -> "DiagramFile":
        return cls(
            annular=diagram.annular,
            crossings=list(diagram.crossings),
            free_loops=list(diagram.free_loops),
            ray_cuts=dict(diagram.ray_cuts),
            orientations=None if diagram.orientations is None else list(diagram.orientations),
        )


class CompanionTable(BaseModel):
    """Polinômios de Jones coloridos J_l (framing 0) do nó companheiro."""

    model_config = ConfigDict(extra="forbid")

    knot: str = Field("", description="Descrição livre do companheiro")
    colors: dict[int, str] = Field(..., description="Cor l -> polinômio de Laurent em texto")

    @field_validator("colors")
    @classmethod
    def _check_polynomials(cls, value: dict[int, str]) -> dict[int, str]:
        for color, text in value.items():
            if color < 0:
                raise ValueError(f"cor negativa: {color}")
            parse_laurent(text)
        return value

    def polynomials(self) -> dict[int, LaurentPoly]:
        return {color: parse_laurent(text) for color, text in sorted(self.colors.items())}

    @classmethod
    def from_polynomials(cls, knot: str, table: dict[int, LaurentPoly]) -> "CompanionTable":
        return cls(knot=knot, colors={color: format_laurent(poly) for color, poly in sorted(table.items())})


class ExpansionRecord(BaseModel):
    """Forma estruturada de uma CableExpansion."""

    model_config = ConfigDict(extra="forbid")

    p: int
    q: int
    n: int
    s: int
    sigma: int
    coefficients: dict[str, str] = Field(..., description="Índice l -> coeficiente g^l em texto")


class CheckResult(BaseModel):
    """Resultado de uma verificação numérica em um ponto da grade."""

    name: str = Field(..., description="Identidade verificada, ex.: LEMMA5")
    params: dict[str, int] = Field(default_factory=dict)
    passed: bool
    residual: float

    def to_line(self) -> str:
        params = " ".join(f"{key}={value}" for key, value in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name} {params} {status} {self.residual:.11e}"


class CacheEntry(BaseModel):
    key: str
    value: str
    tool_version: str
