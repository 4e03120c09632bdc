import json
from pathlib import Path
from unittest.mock import patch

import pytest

from app import __version__
from app.clients.cache import reset_result_cache
from app.main import main
from app.models.skein import SkeinElement
from app.schemas.skein import CheckResult
from app.services.state_sum_oracle import TorusVerification

GOLDEN = Path(__file__).parent / "golden"
DIAGRAMS = Path(__file__).parent.parent / "data" / "diagrams"


def golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.fixture(autouse=True)
def no_cache(monkeypatch):
    monkeypatch.delenv("SKEIN_CACHE", raising=False)
    reset_result_cache()
    yield
    reset_result_cache()


def test_expand_text(capsys):
    assert main(["expand", "2", "3", "1", "0"]) == 0
    assert capsys.readouterr().out == golden("expand_2_3_1_0.txt")


def test_expand_core_meridian(capsys):
    assert main(["expand", "1", "0", "1", "1"]) == 0
    assert capsys.readouterr().out == "1 0 1 1 0\n{0: {0:1}, 2: {0:1}}\n"


def test_expand_structured(capsys):
    assert main(["expand", "2", "1", "1", "0", "--framing", "0", "--format", "structured"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record == {"p": 2, "q": 1, "n": 1, "s": 0, "sigma": 0, "coefficients": {"0": "{-6:1}", "2": "{-2:-1}"}}


def test_expand_invalid_params(capsys):
    assert main(["expand", "4", "2", "1", "0"]) == 2
    assert capsys.readouterr().err.startswith("erro:")


def test_missing_arguments():
    assert main(["expand", "2", "3"]) == 2


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"skein-cables {__version__}"


def test_jones_torus(capsys):
    assert main(["jones-torus", "2", "3", "1"]) == 0
    assert capsys.readouterr().out == golden("jones_torus_2_3_1.txt")
    assert main(["jones-torus", "3", "2", "1"]) == 0
    assert capsys.readouterr().out == golden("jones_torus_2_3_1.txt")


def test_oracle_verify(capsys):
    assert main(["oracle", "verify", "2", "3", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "ORACLE p=2 q=3 n=1 PASS"
    assert out[1] == out[2].replace("formula:", "oracle:")


def test_oracle_verify_budget(capsys):
    assert main(["oracle", "verify", "5", "4", "3"]) == 2
    assert "cruzamentos" in capsys.readouterr().err


def test_oracle_bracket_planar(capsys):
    assert main(["oracle", "bracket", str(DIAGRAMS / "trefoil.json")]) == 0
    assert capsys.readouterr().out == golden("oracle_bracket_trefoil.txt")
    assert main(["oracle", "bracket", str(DIAGRAMS / "unknot.json")]) == 0
    assert capsys.readouterr().out == "{-2:-1, 2:-1}\n"


def test_oracle_bracket_annular(capsys):
    core = str(DIAGRAMS / "cable_1_1_core.json")
    assert main(["oracle", "bracket", core]) == 0
    assert capsys.readouterr().out == "{0: {-6:1, 2:-1}, 2: {2:1}}\n"
    assert main(["oracle", "bracket", core, "--color", "1"]) == 0
    assert capsys.readouterr().out == "{0: {-6:1}, 2: {2:1}}\n"
    assert main(["oracle", "bracket", core, "--color", "0", "--component-color", "1=2"]) == 0
    assert capsys.readouterr().out == "{2: {0:1}}\n"


def test_oracle_bracket_rejects_colors_on_planar():
    assert main(["oracle", "bracket", str(DIAGRAMS / "trefoil.json"), "--color", "1"]) == 2
    assert main(["oracle", "bracket", str(DIAGRAMS / "cable_1_1_core.json"), "--component-color", "x"]) == 2


def test_oracle_bracket_invalid_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"crossings": [[0, 0, 1, 1]], "unknown": true}', encoding="utf-8")
    assert main(["oracle", "bracket", str(bad)]) == 2
    assert main(["oracle", "bracket", str(tmp_path / "missing.json")]) == 2


def test_oracle_writhe(capsys):
    assert main(["oracle", "writhe", str(DIAGRAMS / "trefoil_annular.json")]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["oracle", "writhe", str(DIAGRAMS / "cable_1_1_core.json"), "--component", "0"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert main(["oracle", "writhe", str(DIAGRAMS / "unknot.json")]) == 2


def test_roots_check_lemma5(capsys):
    assert main(["roots", "check", "--r", "4", "--lemma", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert all(line.startswith("LEMMA5 eta=") and " PASS " in line for line in lines)


def test_roots_check_requires_prime(capsys):
    assert main(["roots", "check", "--r", "3", "--lemma", "5"]) == 2


def test_roots_check_validates_parameters(capsys):
    assert main(["roots", "check", "--r", "0", "--lemma", "3"]) == 2
    assert "r deve ser >= 1" in capsys.readouterr().err
    assert main(["roots", "check", "--r", "4", "--lemma", "4", "--count", "-1"]) == 2
    assert "--count" in capsys.readouterr().err


def test_roots_check_lemma2(capsys):
    assert main(["roots", "check", "--r", "13", "--lemma", "2"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_roots_table(capsys):
    assert main(["roots", "table", "1", "1", "--n-max", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split()[:2] for line in lines] == [["1", "1.00000000000e+00"], ["2", "1.00000000000e+00"]]


def test_companion_and_satellite(tmp_path, capsys):
    assert main(["expand", "2", "1", "1", "0"]) == 0
    expansion = tmp_path / "expansion.txt"
    expansion.write_text(capsys.readouterr().out, encoding="utf-8")

    assert main(["companion", "torus", "2", "3", "--n-max", "2"]) == 0
    companion = tmp_path / "trefoil.json"
    companion.write_text(capsys.readouterr().out, encoding="utf-8")
    assert json.loads(companion.read_text(encoding="utf-8"))["knot"] == "T(2,3)"

    assert main(["satellite", "--expansion", str(expansion), "--companion", str(companion)]) == 0
    assert capsys.readouterr().out == golden("satellite_2_1_trefoil.txt")


def test_satellite_missing_colors(tmp_path, capsys):
    assert main(["expand", "2", "3", "2", "1"]) == 0
    expansion = tmp_path / "expansion.txt"
    expansion.write_text(capsys.readouterr().out, encoding="utf-8")
    assert main(["companion", "unknot", "--n-max", "2"]) == 0
    companion = tmp_path / "unknot.json"
    companion.write_text(capsys.readouterr().out, encoding="utf-8")

    assert main(["satellite", "--expansion", str(expansion), "--companion", str(companion)]) == 2
    assert "cores ausentes" in capsys.readouterr().err


def test_cache_directory(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SKEIN_CACHE", str(tmp_path))
    reset_result_cache()
    assert main(["expand", "2", "3", "1", "0"]) == 0
    first = capsys.readouterr().out
    assert list(tmp_path.glob("expand_render_expansion_*.json"))
    assert main(["expand", "2", "3", "1", "0"]) == 0
    assert capsys.readouterr().out == first == golden("expand_2_3_1_0.txt")


@patch("app.services.state_sum_oracle.StateSumOracle.verify_torus")
def test_oracle_verify_mismatch(mock_verify, capsys):
    mock_verify.return_value = TorusVerification(
        p=2, q=3, n=1, oracle=SkeinElement.basis(0), formula=SkeinElement.basis(2)
    )
    assert main(["oracle", "verify", "2", "3", "1"]) == 1
    captured = capsys.readouterr()
    assert captured.out.startswith("ORACLE p=2 q=3 n=1 FAIL")
    assert "divergem" in captured.err


@patch("app.services.root_verifier.RootOfUnityVerifier.lemma5_grid")
def test_roots_check_failure(mock_grid, capsys):
    mock_grid.return_value = [
        CheckResult(name="LEMMA5", params={"eta": 1, "r": 4}, passed=True, residual=0.0),
        CheckResult(name="LEMMA5", params={"eta": 2, "r": 4}, passed=False, residual=0.5),
    ]
    assert main(["roots", "check", "--r", "4", "--lemma", "5"]) == 1
    assert capsys.readouterr().out.splitlines()[1] == "LEMMA5 eta=2 r=4 FAIL 5.00000000000e-01"
