"""
Exceções do domínio.

Cada exceção carrega o código de saída que a CLI devolve ao usuário:
0 sucesso, 1 divergência de verificação, 2 entrada inválida.
"""

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


class SkeinError(Exception):
    """Erro base da biblioteca."""

    exit_code: int = EXIT_INVALID

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidParametersError(SkeinError, ValueError):
    """Parâmetros fora do domínio (p<=0, p e q não coprimos, r<1...)."""


class ParseError(SkeinError, ValueError):
    """Texto ou arquivo malformado."""


class NotDivisibleError(SkeinError, ArithmeticError):
    """Divisão exata sem quociente de Laurent."""


class DivisionByZeroError(SkeinError, ZeroDivisionError):
    """Divisão pelo polinômio nulo."""


class DiagramError(SkeinError, ValueError):
    """Diagrama malformado."""


class InvalidAnnularDataError(DiagramError):
    """Dados de raio inconsistentes: laço com enrolamento fora de {-1, 0, 1}."""


class UnorientedDiagramError(DiagramError):
    """Operação exige orientação e o diagrama não tem."""


class CrossingBudgetError(SkeinError):
    """Diagrama excede o limite de cruzamentos da soma de estados."""


class MissingColorError(SkeinError, LookupError):
    """Tabela do nó companheiro sem a cor necessária."""


class PreconditionError(SkeinError, ValueError):
    """Pré-condição de uma verificação numérica violada."""


class ParityError(PreconditionError):
    """Par (f, g) não é par/ímpar no intervalo testado."""


class VerificationMismatchError(SkeinError):
    """Oráculo e fórmula divergem."""

    exit_code = EXIT_MISMATCH


class EvaluationOverflowError(SkeinError, OverflowError):
    """Coeficiente grande demais para a avaliação em ponto flutuante."""
