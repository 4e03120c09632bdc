"""Subcomandos oracle: somas de estados independentes das fórmulas fechadas."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import emit, read_text
from app.core.container import Container
from app.core.exceptions import EXIT_OK, ParseError, VerificationMismatchError
from app.models.diagram import Diagram
from app.models.laurent import format_laurent
from app.models.skein import format_skein, format_zpoly
from app.schemas.skein import DiagramFile
from app.services.state_sum_oracle import StateSumOracle


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("oracle", help="Verificação por força bruta")
    commands = parser.add_subparsers(dest="oracle_command", required=True)

    verify = commands.add_parser("verify", help="Compara o oráculo com a forma fechada de T(p, q; 0)")
    verify.add_argument("p", type=int)
    verify.add_argument("q", type=int)
    verify.add_argument("n", type=int, metavar="N")
    verify.set_defaults(handler=run_verify)

    bracket = commands.add_parser("bracket", help="Avalia um arquivo de diagrama")
    bracket.add_argument("file")
    bracket.add_argument("--color", type=int, default=None, help="Cor de todas as componentes (diagrama no anel)")
    bracket.add_argument(
        "--component-color",
        action="append",
        default=[],
        metavar="INDICE=COR",
        help="Cor de uma componente específica; pode repetir",
    )
    bracket.set_defaults(handler=run_bracket)

    writhe = commands.add_parser("writhe", help="Writhe de um diagrama orientado")
    writhe.add_argument("file")
    writhe.add_argument("--component", type=int, default=None, help="Apenas auto-cruzamentos da componente")
    writhe.set_defaults(handler=run_writhe)


def _parse_component_colors(items: list[str]) -> dict[int, int]:
    colors: dict[int, int] = {}
    for item in items:
        index, sep, color = item.partition("=")
        if not sep or not index.strip().lstrip("-").isdigit() or not color.strip().lstrip("-").isdigit():
            raise ParseError(f"cor de componente malformada: {item!r} (use INDICE=COR)")
        colors[int(index)] = int(color)
    return colors


def _load_diagram(path: str) -> Diagram:
    return DiagramFile.model_validate_json(read_text(path)).to_diagram()


@inject
def run_verify(args: argparse.Namespace, oracle: StateSumOracle = Provide[Container.state_sum_oracle]) -> int:
    result = oracle.verify_torus(args.p, args.q, args.n)
    status = "PASS" if result.passed else "FAIL"
    emit(f"ORACLE p={result.p} q={result.q} n={result.n} {status}")
    emit(f"oracle: {format_skein(result.oracle)}")
    emit(f"formula: {format_skein(result.formula)}")
    if not result.passed:
        raise VerificationMismatchError(f"oráculo e fórmula divergem para p={args.p} q={args.q} N={args.n}")
    return EXIT_OK


@inject
def run_bracket(args: argparse.Namespace, oracle: StateSumOracle = Provide[Container.state_sum_oracle]) -> int:
    diagram = _load_diagram(args.file)
    component_colors = _parse_component_colors(args.component_color)
    if not diagram.annular:
        if args.color is not None or component_colors:
            raise ParseError("cores só se aplicam a diagramas no anel")
        emit(format_laurent(oracle.kauffman_bracket(diagram)))
    elif args.color is None and not component_colors:
        emit(format_zpoly(oracle.annulus_bracket(diagram)))
    else:
        default = 1 if args.color is None else args.color
        emit(format_skein(oracle.colored_annulus_bracket(diagram, default, component_colors)))
    return EXIT_OK


@inject
def run_writhe(args: argparse.Namespace, oracle: StateSumOracle = Provide[Container.state_sum_oracle]) -> int:
    emit(str(oracle.diagram_writhe(_load_diagram(args.file), args.component)))
    return EXIT_OK
