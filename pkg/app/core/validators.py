"""
Validadores de domínio.
Convertem parâmetros brutos em valores validados ou levantam exceções com código de saída.
"""

import sympy
from pydantic import ValidationError

from app.core.exceptions import InvalidParametersError, PreconditionError
from app.schemas.skein import CableParams


def validate_cable_params(p: int, q: int, n: int = 0, s: int = 0, sigma: int | None = None) -> CableParams:
    """
    Valida parâmetros de cabo.

    Args:
        p: Voltas longitudinais (p > 0)
        q: Voltas meridionais (coprimo com p)
        n: Cor do cabo
        s: Cor da alma
        sigma: Framing opcional

    Returns:
        CableParams validado

    Raises:
        InvalidParametersError: Se os parâmetros estiverem fora do domínio
    """
    try:
        return CableParams(p=p, q=q, n=n, s=s, sigma=sigma)
    except ValidationError as e:
        reasons = "; ".join(error["msg"] for error in e.errors())
        raise InvalidParametersError(f"parâmetros de cabo inválidos ({p}, {q}, {n}, {s}): {reasons}") from e


def validate_root_order(r: int) -> int:
    """Valida a ordem r >= 1 da raiz A = exp(pi i / (2(r+1)))."""
    if r < 1:
        raise InvalidParametersError(f"r deve ser >= 1, recebido {r}")
    return r


def validate_prime_modulus(r: int) -> int:
    """
    Exige r+1 primo.

    Raises:
        PreconditionError: Se r+1 não for primo
    """
    validate_root_order(r)
    if not sympy.isprime(r + 1):
        raise PreconditionError(f"r+1 = {r + 1} não é primo")
    return r


def validate_color(name: str, value: int) -> int:
    if value < 0:
        raise InvalidParametersError(f"{name} deve ser >= 0, recebido {value}")
    return value
