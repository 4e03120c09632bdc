"""Subcomando companion: gera tabelas J_l (framing 0) para uso em satellite."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import dump_json, emit
from app.core.container import Container
from app.core.exceptions import EXIT_OK
from app.core.validators import validate_cable_params, validate_color
from app.models.skein import unknot_value
from app.schemas.skein import CompanionTable
from app.services.cable_calculator import CableCalculator


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("companion", help="Tabelas de Jones coloridos de companheiros")
    commands = parser.add_subparsers(dest="companion_command", required=True)

    unknot = commands.add_parser("unknot", help="Nó trivial: J_l = (-1)^l [l+1]")
    unknot.add_argument("--n-max", type=int, required=True)
    unknot.set_defaults(handler=run_unknot)

    torus = commands.add_parser("torus", help="Nó toro T(p, q)")
    torus.add_argument("p", type=int)
    torus.add_argument("q", type=int)
    torus.add_argument("--n-max", type=int, required=True)
    torus.set_defaults(handler=run_torus)


def run_unknot(args: argparse.Namespace) -> int:
    validate_color("n-max", args.n_max)
    table = {l: unknot_value(l) for l in range(args.n_max + 1)}  # noqa: E741
    emit(dump_json(CompanionTable.from_polynomials("unknot", table).model_dump()))
    return EXIT_OK


@inject
def run_torus(args: argparse.Namespace, calculator: CableCalculator = Provide[Container.cable_calculator]) -> int:
    validate_cable_params(args.p, args.q)
    validate_color("n-max", args.n_max)
    table = {l: calculator.torus_knot_jones(args.p, args.q, l, 0) for l in range(args.n_max + 1)}  # noqa: E741
    emit(dump_json(CompanionTable.from_polynomials(f"T({args.p},{args.q})", table).model_dump()))
    return EXIT_OK
