"""Valores do módulo de cabos."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from pydantic import ValidationError

from app.core.exceptions import ParseError
from app.core.validators import validate_cable_params
from app.models.laurent import LaurentPoly, format_laurent, parse_laurent
from app.models.skein import SkeinElement, format_skein, parse_skein
from app.schemas.skein import CableParams, ExpansionRecord

_INT_RE = re.compile(r"^-?\d+$")


@dataclass(frozen=True)
class CableExpansion:
    """T_sigma(p, q; s) = soma de g^l e_l, com os parâmetros que a geraram."""

    params: CableParams
    element: SkeinElement

    @property
    def sigma(self) -> int:
        return self.params.framing


@dataclass(frozen=True)
class TorusDecomposition:
    """q = epsilon*p + beta com 0 <= beta < p, e alpha = p*beta."""

    epsilon: int
    beta: int
    alpha: int


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def value(self) -> Fraction:
        result = Fraction(self.terms[-1])
        for term in reversed(self.terms[:-1]):
            result = term + 1 / result
        return result


@dataclass(frozen=True)
class PathStep:
    """Passo do caminho (1, 0) -> (p, q): 'twist' leva q em q+p, 'swap' troca p e q."""

    kind: str
    p: int
    q: int


def format_expansion(x: CableExpansion) -> str:
    """Cabeçalho `p q N s sigma` seguido do elemento em formato texto."""
    params = x.params
    return f"{params.p} {params.q} {params.n} {params.s} {x.sigma}\n{format_skein(x.element)}"


def parse_expansion(text: str) -> CableExpansion:
    """
    Lê o formato texto ou o formato estruturado (JSON) de uma expansão.

    Raises:
        ParseError: Se o cabeçalho ou o elemento forem malformados
    """
    body = text.strip()
    if body.startswith("{"):
        try:
            record = ExpansionRecord.model_validate_json(body)
        except ValidationError as e:
            raise ParseError(f"expansão estruturada inválida: {e.errors()[0]['msg']}") from e
        return from_record(record)

    header, _, element = body.partition("\n")
    fields = header.split()
    if len(fields) != 5 or not all(_INT_RE.match(field) for field in fields):
        raise ParseError(f"cabeçalho de expansão malformado: {header!r}")
    p, q, n, s, sigma = (int(field) for field in fields)
    return CableExpansion(params=validate_cable_params(p, q, n, s, sigma), element=parse_skein(element))


def to_record(x: CableExpansion) -> ExpansionRecord:
    params = x.params
    return ExpansionRecord(
        p=params.p,
        q=params.q,
        n=params.n,
        s=params.s,
        sigma=x.sigma,
        coefficients={str(l): format_laurent(coeff) for l, coeff in x.element.items()},  # noqa: E741
    )


def from_record(record: ExpansionRecord) -> CableExpansion:
    terms: dict[int, LaurentPoly] = {}
    for key, text in record.coefficients.items():
        if not _INT_RE.match(key) or int(key) < 0:
            raise ParseError(f"índice inválido: {key!r}")
        terms[int(key)] = parse_laurent(text)
    params = validate_cable_params(record.p, record.q, record.n, record.s, record.sigma)
    return CableExpansion(params=params, element=SkeinElement(terms))
