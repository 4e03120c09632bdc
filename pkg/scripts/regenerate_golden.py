#!/usr/bin/env python3
"""
Regenera os arquivos golden dos testes de CLI.
Usage: python scripts/regenerate_golden.py
"""

import io
import sys
import tempfile
from contextlib import redirect_stdout
from pathlib import Path

# Add project root to path to import app
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

GOLDEN_DIR = project_root / "tests" / "golden"
DIAGRAMS_DIR = project_root / "data" / "diagrams"


def run_cli(argv: list[str]) -> str:
    """Executa a CLI e devolve o stdout; aborta se o código de saída não for 0."""
    from app.main import main

    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(argv)
    if code != 0:
        raise SystemExit(f"comando falhou ({code}): {' '.join(argv)}")
    return buffer.getvalue()


def write_golden(name: str, content: str) -> None:
    output_file = GOLDEN_DIR / name
    output_file.write_text(content, encoding="utf-8")
    print(f"✓ {output_file.relative_to(project_root)}", file=sys.stderr)


def export_satellite() -> str:
    """expand -> companion -> satellite, como no fluxo documentado no README."""
    with tempfile.TemporaryDirectory() as tmp:
        expansion = Path(tmp) / "expansion.txt"
        expansion.write_text(run_cli(["expand", "2", "1", "1", "0"]), encoding="utf-8")
        companion = Path(tmp) / "trefoil.json"
        companion.write_text(run_cli(["companion", "torus", "2", "3", "--n-max", "2"]), encoding="utf-8")
        return run_cli(["satellite", "--expansion", str(expansion), "--companion", str(companion)])


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    write_golden("expand_2_3_1_0.txt", run_cli(["expand", "2", "3", "1", "0"]))
    write_golden("jones_torus_2_3_1.txt", run_cli(["jones-torus", "2", "3", "1"]))
    write_golden("oracle_bracket_trefoil.txt", run_cli(["oracle", "bracket", str(DIAGRAMS_DIR / "trefoil.json")]))
    write_golden("satellite_2_1_trefoil.txt", export_satellite())


if __name__ == "__main__":
    main()
