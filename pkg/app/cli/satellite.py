"""Subcomando satellite: avalia uma expansão de cabo sobre um nó companheiro."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import emit, read_text
from app.core.container import Container
from app.core.exceptions import EXIT_OK
from app.models.cable import parse_expansion
from app.models.laurent import format_laurent
from app.schemas.skein import CompanionTable
from app.services.cable_calculator import CableCalculator


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("satellite", help="Soma g^l J_l sobre a tabela do companheiro")
    parser.add_argument("--expansion", required=True, help="Saída de expand (texto ou estruturada)")
    parser.add_argument("--companion", required=True, help="Tabela JSON de J_l do companheiro")
    parser.set_defaults(handler=run_satellite)


@inject
def run_satellite(
    args: argparse.Namespace, calculator: CableCalculator = Provide[Container.cable_calculator]
) -> int:
    expansion = parse_expansion(read_text(args.expansion))
    companion = CompanionTable.model_validate_json(read_text(args.companion))
    emit(format_laurent(calculator.satellite_evaluate(expansion, companion.polynomials())))
    return EXIT_OK
