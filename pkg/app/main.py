import sys
from collections.abc import Sequence

from dotenv import load_dotenv

# Carrega .env ANTES de tudo
load_dotenv()

from app.cli import run  # noqa: E402
from app.core.container import Container  # noqa: E402

# Inicializa container DI
container = Container()


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
