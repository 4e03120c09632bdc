"""Interface de linha de comando: um módulo por grupo de subcomandos."""

import argparse
from collections.abc import Sequence

from app import __version__
from app.cli import companion, expand, jones, oracle, roots, satellite
from app.cli.utils import handle_errors


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skein-cables",
        description="Cabos no módulo de skein de Kauffman do toro sólido.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (expand, jones, oracle, roots, satellite, companion):
        module.register(subparsers)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """
    Executa um subcomando.

    Returns:
        0 sucesso, 1 divergência de verificação, 2 entrada inválida
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return handle_errors(args.handler)(args)
