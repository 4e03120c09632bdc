"""Subcomando jones-torus: polinômio de Jones colorido de T(p, q)."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import emit
from app.core.cache_decorator import cache_result
from app.core.container import Container
from app.core.exceptions import EXIT_OK
from app.core.validators import validate_cable_params
from app.models.laurent import format_laurent
from app.services.cable_calculator import CableCalculator


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("jones-torus", help="J_N do nó toro T(p, q) em S^3")
    parser.add_argument("p", type=int)
    parser.add_argument("q", type=int)
    parser.add_argument("n", type=int, metavar="N")
    parser.add_argument("--framing", type=int, default=0, help="Framing do nó (padrão: 0)")
    parser.set_defaults(handler=run_jones)


@cache_result(key_prefix="jones")
def render_jones(calculator: CableCalculator, p: int, q: int, n: int, framing: int) -> str:
    return format_laurent(calculator.torus_knot_jones(p, q, n, framing))


@inject
def run_jones(args: argparse.Namespace, calculator: CableCalculator = Provide[Container.cable_calculator]) -> int:
    validate_cable_params(args.p, args.q, args.n)
    emit(render_jones(calculator, args.p, args.q, args.n, args.framing))
    return EXIT_OK
