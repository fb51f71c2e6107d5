import json
from fractions import Fraction

import pytest
from typer.testing import CliRunner

from trilie.algebras.algebra_files import read_document
from trilie.algebras.algebra_ops import fundamental_identity_violations
from trilie.app import app
from trilie.dependencies.config import Settings, load_settings
from trilie.dependencies.loaders import load_algebra, parse_map, parse_torus
from trilie.exceptions import AlgebraFormatError, TrilieError

runner = CliRunner(mix_stderr=False)

DUPLICATE_TRIPLE = """
dim: 3
brackets:
  - {i: 1, j: 2, k: 3, value: ["1", "0", "0"]}
  - {i: 1, j: 2, k: 3, value: ["0", "1", "0"]}
"""

NOT_A_3_LIE_ALGEBRA = """
dim: 4
brackets:
  - {i: 1, j: 2, k: 3, value: ["0", "0", "0", "1"]}
  - {i: 1, j: 2, k: 4, value: ["1", "0", "0", "0"]}
"""

NO_TORUS = """
name: plain
dim: 3
brackets:
  - {i: 1, j: 2, k: 3, value: ["1", "0", "0"]}
"""


def structured(*args):
    result = runner.invoke(app, [*args, "--format", "structured"])
    return result, json.loads(result.stdout) if result.stdout.strip() else None


def write(tmp_path, text, name="algebra.yaml"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_catalog_listing():
    result, report = structured("catalog")
    assert result.exit_code == 0
    assert "A3" in report["result"]["algebras"]
    assert report["passed"] is True


def test_catalog_document():
    result, report = structured("catalog", "A3")
    assert result.exit_code == 0
    assert report["result"]["brackets"][0]["value"] == ["1", "0", "0"]


def test_check_a_catalog_algebra():
    result, report = structured("check", "catalog:B4")
    assert result.exit_code == 0
    assert report["result"]["center"]["dim"] == 1
    assert report["result"]["has_torus"] is True


def test_check_text_output():
    result = runner.invoke(app, ["check", "catalog:A3"])
    assert result.exit_code == 0
    assert "check on catalog:A3" in result.stdout


def test_malformed_file_exits_with_2(tmp_path):
    result = runner.invoke(app, ["check", write(tmp_path, DUPLICATE_TRIPLE)])
    assert result.exit_code == 2


def test_missing_file_exits_with_2(tmp_path):
    result = runner.invoke(app, ["check", str(tmp_path / "missing.yaml")])
    assert result.exit_code == 2


def test_fundamental_identity_failure_exits_with_3(tmp_path):
    result = runner.invoke(app, ["spaces", write(tmp_path, NOT_A_3_LIE_ALGEBRA)])
    assert result.exit_code == 3


def test_invalid_torus_exits_with_4():
    result = runner.invoke(app, ["weights", "catalog:A3", "--torus", "e1;e2"])
    assert result.exit_code == 4


def test_missing_torus_exits_with_4(tmp_path):
    result = runner.invoke(app, ["weights", write(tmp_path, NO_TORUS)])
    assert result.exit_code == 4


def test_spaces_for_one_space():
    result, report = structured("spaces", "catalog:A3", "--which", "der")
    assert result.exit_code == 0
    assert report["result"]["der"]["dim"] == 6
    assert "qder" not in report["result"]
    assert report["result"]["derived_algebra"]["dim"] == 1


def test_weights_with_a_torus_option():
    result, report = structured("weights", "catalog:A3", "--torus", "x3;x2")
    assert result.exit_code == 0
    assert report["result"]["roots"] == {"(-1)": 1, "(0)": 2}


def test_kernel_with_a_map():
    result, report = structured("kernel", "catalog:B4", "--random-maps", "4",
                                "--map", "0,0,0,0;0,0,0,0;0,0,0,0;0,0,1,0")
    assert result.exit_code == 0
    assert report["result"]["ker_mu_dim"] == 63
    assert report["result"]["map"] == {"in_qder": False, "kernel_criterion": False}


def test_extend_skips_the_splitting_when_the_center_is_not_zero():
    result, report = structured("extend", "catalog:B4")
    assert result.exit_code == 0
    assert report["result"]["semidirect"].startswith("not applicable")


def test_verify_runs_every_section():
    result, report = structured("verify", "catalog:B4", "--random-maps", "4")
    assert result.exit_code == 0
    assert report["passed"] is True
    assert {"dimensions", "extension", "kernel", "weights", "decomposable"} <= set(report["result"])
    assert report["result"]["dimensions"]["qder"] == 13


def test_verify_is_deterministic():
    args = ("verify", "catalog:A3", "--torus", "e2;e3", "--random-maps", "10", "--seed", "11")
    result, first = structured(*args)
    assert result.exit_code == 0
    second = structured(*args)[1]
    first.pop("elapsed_seconds")
    second.pop("elapsed_seconds")
    assert first == second


def test_settings_from_the_environment():
    settings = load_settings({"TRILIE_SEED": "5", "TRILIE_LOG_LEVEL": "debug", "TRILIE_FORMAT": ""})
    assert settings.seed == 5
    assert settings.log_level == "DEBUG"
    assert settings.format == "text"
    assert Settings().max_exhaustive == 8


def test_bad_setting():
    with pytest.raises(TrilieError):
        load_settings({"TRILIE_MAX_EXHAUSTIVE": "-1"})


def test_torus_and_map_syntax():
    loaded = load_algebra("catalog:B4")
    a = loaded.algebra
    assert parse_torus("x2; e3; 0,0,0,1", a) == loaded.torus
    assert parse_map("e4;e4;e4;e4", a).image_of_basis(2) == (0, 0, 0, 1)
    with pytest.raises(AlgebraFormatError):
        parse_torus("e9", a)
    with pytest.raises(AlgebraFormatError):
        parse_map("e1;e2", a)
    with pytest.raises(AlgebraFormatError):
        parse_torus("1,x", a)


SECOND_BASIS_VECTOR = """
name: A3 variant
dim: 3
brackets:
  - {i: 1, j: 2, k: 3, value: ["0", "1", "0"]}
"""

BLOCKS_NOT_IDEALS = """
name: A3 split badly
dim: 3
brackets:
  - {i: 1, j: 2, k: 3, value: ["1", "0", "0"]}
blocks: [[1, 2], [3]]
"""


def test_derivation_basis_shows_the_trace_relation():
    result, report = structured("spaces", "catalog:A3", "--which", "der")
    basis = report["result"]["der"]["basis"]
    assert [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]] in basis
    for rows in basis:
        assert rows[0][1] == rows[0][2] == "0"
        assert Fraction(rows[2][2]) == -Fraction(rows[1][1])


def test_any_nonzero_bracket_on_three_vectors_is_accepted(tmp_path):
    result, report = structured("check", write(tmp_path, SECOND_BASIS_VECTOR))
    assert result.exit_code == 0
    assert report["result"]["derived_algebra"]["dim"] == 1


def test_identity_violations_exit_with_3(tmp_path):
    document = read_document(NOT_A_3_LIE_ALGEBRA, "bad.yaml")
    [(indices, residual), *_] = fundamental_identity_violations(document.to_algebra())
    assert len(indices) == 5
    assert any(residual)
    result = runner.invoke(app, ["check", write(tmp_path, NOT_A_3_LIE_ALGEBRA)])
    assert result.exit_code == 3
    assert result.stdout == ""


def test_verify_reports_blocks_that_are_not_ideals(tmp_path):
    result, report = structured("verify", write(tmp_path, BLOCKS_NOT_IDEALS), "--random-maps", "2")
    assert result.exit_code == 1
    assert report["result"]["decomposable"]["blocks"].startswith("not valid")
    assert report["result"]["dimensions"]["der"] == 6
    assert {c["name"] for c in report["checks"] if not c["passed"]} == {
        "blocks: ideals with zero mixed brackets spanning A", "decomposable: blocks form a direct sum of ideals"}
