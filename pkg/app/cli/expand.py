"""Subcomando expand: T_sigma(p, q; s) na base e_l."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import dump_json, emit
from app.core.cache_decorator import cache_result
from app.core.container import Container
from app.core.exceptions import EXIT_OK
from app.core.validators import validate_cable_params
from app.models.cable import format_expansion, to_record
from app.services.cable_calculator import CableCalculator


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("expand", help="Expande o cabo (p, q) com cores N e s")
    parser.add_argument("p", type=int)
    parser.add_argument("q", type=int)
    parser.add_argument("n", type=int, metavar="N")
    parser.add_argument("s", type=int)
    parser.add_argument("--framing", type=int, default=None, help="Framing sigma (padrão: p*q)")
    parser.add_argument("--format", dest="output_format", choices=["text", "structured"], default="text")
    parser.set_defaults(handler=run_expand)


@cache_result(key_prefix="expand")
def render_expansion(
    calculator: CableCalculator, p: int, q: int, n: int, s: int, framing: int | None, output_format: str
) -> str:
    expansion = calculator.expand(validate_cable_params(p, q, n, s, framing))
    if output_format == "structured":
        return dump_json(to_record(expansion).model_dump())
    return format_expansion(expansion)


@inject
def run_expand(args: argparse.Namespace, calculator: CableCalculator = Provide[Container.cable_calculator]) -> int:
    validate_cable_params(args.p, args.q, args.n, args.s, args.framing)
    emit(render_expansion(calculator, args.p, args.q, args.n, args.s, args.framing, args.output_format))
    return EXIT_OK
