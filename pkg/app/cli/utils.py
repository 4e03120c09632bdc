"""Utilitários compartilhados entre subcomandos."""

import functools
import json
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError

from app.core.exceptions import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, ParseError, SkeinError
from app.schemas.skein import CheckResult

logger = structlog.get_logger(__name__)

Handler = Callable[[Any], int]


def handle_errors(func: Handler) -> Handler:
    """Converte exceções do domínio no código de saída correspondente."""

    @functools.wraps(func)
    def wrapper(args: Any) -> int:
        try:
            return func(args)
        except SkeinError as e:
            logger.warning("comando_falhou", comando=func.__name__, erro=type(e).__name__, detail=e.detail)
            print(f"erro: {e.detail}", file=sys.stderr)
            return e.exit_code
        except ValidationError as e:
            reasons = "; ".join(error["msg"] for error in e.errors())
            logger.warning("entrada_invalida", comando=func.__name__, detail=reasons)
            print(f"erro: {reasons}", file=sys.stderr)
            return EXIT_INVALID

    return wrapper


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def read_text(path: str) -> str:
    """
    Lê um arquivo de entrada.

    Raises:
        ParseError: Se o arquivo não puder ser lido
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"não foi possível ler {path}: {e.strerror}") from e


def report(results: list[CheckResult]) -> int:
    """Imprime uma linha por ponto da grade; 1 se algum falhou."""
    emit("\n".join(result.to_line() for result in results) if results else "")
    failed = sum(1 for result in results if not result.passed)
    logger.info("grade_verificada", total=len(results), falhas=failed)
    return EXIT_MISMATCH if failed else EXIT_OK
