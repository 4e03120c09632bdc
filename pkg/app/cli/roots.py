"""Subcomandos roots: identidades verificadas em raízes da unidade."""

import argparse

from dependency_injector.wiring import Provide, inject

from app.cli.utils import emit, report
from app.core.container import Container
from app.core.exceptions import EXIT_OK, InvalidParametersError
from app.core.validators import validate_root_order
from app.services.root_verifier import RootOfUnityVerifier

LEMMAS = ["2", "3", "4", "5", "omega", "star", "cosh", "path"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("roots", help="Verificações em A = exp(pi i / (2(r+1)))")
    commands = parser.add_subparsers(dest="roots_command", required=True)

    check = commands.add_parser("check", help="Roda uma grade de verificações; uma linha por ponto")
    check.add_argument("--r", type=int, required=True)
    check.add_argument("--lemma", choices=LEMMAS, required=True)
    check.add_argument("--seed", type=int, default=0, help="Semente das grades aleatórias (3 e 4)")
    check.add_argument("--count", type=int, default=200, help="Sorteios das grades aleatórias")
    check.add_argument("--p", type=int, default=3, help="Destino do caminho (lemma path)")
    check.add_argument("--q", type=int, default=2, help="Destino do caminho (lemma path)")
    check.add_argument("--n", type=int, default=1, help="Cor do cabo (lemma path)")
    check.add_argument("--s", type=int, default=0, help="Cor da alma (lemma path)")
    check.set_defaults(handler=run_check)

    table = commands.add_parser("table", help="J_N normalizado de T(p, q) avaliado em r = N")
    table.add_argument("p", type=int)
    table.add_argument("q", type=int)
    table.add_argument("--n-max", type=int, default=5)
    table.set_defaults(handler=run_table)


@inject
def run_check(
    args: argparse.Namespace, verifier: RootOfUnityVerifier = Provide[Container.root_verifier]
) -> int:
    r = validate_root_order(args.r)
    if args.count < 0:
        raise InvalidParametersError(f"--count deve ser >= 0, recebido {args.count}")
    grids = {
        "2": lambda: verifier.lemma2_grid(r),
        "3": lambda: verifier.lemma3_grid(args.seed, args.count),
        "4": lambda: verifier.lemma4_grid(args.seed, args.count),
        "5": lambda: verifier.lemma5_grid(r),
        "omega": lambda: verifier.omega_grid(r),
        "star": lambda: verifier.star_grid(r),
        "cosh": lambda: verifier.cosh_grid(r),
        "path": lambda: verifier.path_check(args.p, args.q, args.n, args.s, r),
    }
    return report(grids[args.lemma]())


@inject
def run_table(args: argparse.Namespace, verifier: RootOfUnityVerifier = Provide[Container.root_verifier]) -> int:
    for n, value in verifier.root_evaluate_jones(args.p, args.q, args.n_max).items():
        emit(f"{n} {value.real:.11e} {value.imag:.11e}")
    return EXIT_OK
