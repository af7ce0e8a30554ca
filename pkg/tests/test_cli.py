import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest
from jsonschema import validate

from behrend.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "src" / "behrend" / "schema.json").read_text()
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    payload = json.loads(out)
    validate(payload, SCHEMA)
    return payload


class TestCommands:
    def test_nu_text(self, capsys):
        code, out, _ = run(capsys, "nu", "(x y, x^4, y^3)")
        assert code == 0
        assert "nu = 7" in out and "length = 6" in out
        assert "(1, 3)" in out and "(2, 1)" in out

    def test_nu_json(self, capsys):
        payload = run_json(capsys, "nu", "(x^2, x y^2, y^3)")
        assert payload["nu"] == 6 and payload["length"] == 5 and payload["normal"]

    def test_nu_tower_engine(self, capsys):
        code, out, _ = run(capsys, "nu", "tower(x; g = y; exps = [2, 3])")
        assert code == 0 and "nu = " in out

    def test_length(self, capsys):
        code, out, _ = run(capsys, "length", "m^4")
        assert code == 0 and out.strip() == "length = 10"

    def test_length_tower_closed_form(self, capsys):
        code, out, _ = run(capsys, "length", "tower(x; g = y; exps = [1, 2, 3])")
        assert code == 0 and out.strip() == "length = 10"

    def test_normalize(self, capsys):
        code, out, _ = run(capsys, "normalize", "(x^2, y^3)")
        assert code == 0 and out.strip() == "(x^2, x y^2, y^3)"

    def test_normal_query(self, capsys):
        code, out, _ = run(capsys, "normal?", "(x^2, y^2)")
        assert code == 0 and out.strip() == "not normal"
        code, out, _ = run(capsys, "normal", "(x^6, x^4 y, x^2 y^2, x y^3, y^5)")
        assert code == 0 and out.strip() == "normal"

    def test_factor(self, capsys):
        code, out, _ = run(capsys, "factor", "(x^6, x^4 y, x^2 y^2, x y^3, y^5)")
        assert code == 0 and out.strip() == "n(1,2) * n(1,1) * n(2,1)^2"

    def test_fan(self, capsys):
        payload = run_json(capsys, "fan", "(x^2, x y^2, y^3)")
        assert payload["rays"] == [[1, 0], [3, 2], [0, 1]]
        assert [c["index"] for c in payload["cones"]] == [2, 3]

    def test_ferrers(self, capsys):
        code, out, _ = run(capsys, "ferrers", "(x^2, x y^2, y^3)")
        assert code == 0
        assert out.splitlines() == ["#", "# #", "# #"]

    def test_dynkin_dot(self, capsys):
        code, out, _ = run(
            capsys, "dynkin", "tower(x; g=0; exps=[2]) * tower(y; g=0; exps=[3])"
        )
        assert code == 0
        assert out.startswith("graph dynkin {") and "rank=same" in out
        assert out.count(" -- ") == 3

    def test_dynkin_json(self, capsys):
        payload = run_json(capsys, "dynkin", "tower(y; g = 0; exps = [1, 2, 3])")
        assert payload["nu"] == 14
        assert [n["self_intersection"] for n in payload["nodes"]] == [-2, -2, -1]

    def test_verify_quick(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "2", "--bounds", "quick")
        assert code == 0
        assert "0 fail" in out

    def test_verify_json(self, capsys):
        payload = run_json(capsys, "verify", "--seed", "2", "--bounds", "quick")
        assert payload["counts"]["fail"] == 0
        assert all(r["status"] != "fail" for r in payload["results"])


class TestExitCodes:
    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, "nu", "(x^2,,)")
        assert code == 1 and "^" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "nu", "(1)")
        assert code == 2 and "domain error" in err

    def test_non_normal_factor_is_domain_error(self, capsys):
        code, _, err = run(capsys, "factor", "(x^2, y^2)")
        assert code == 2 and "normalize" in err

    def test_three_variables(self, capsys):
        code, _, err = run(capsys, "nu", "(x, y, z)")
        assert code == 3 and "three-variable" in err

    def test_unsupported_mix(self, capsys):
        code, _, err = run(capsys, "length", "(x^2, y^2) * tower(x; g=y; exps=[2])")
        assert code == 3

    def test_unsupported_length_route(self, capsys):
        code, _, err = run(
            capsys,
            "length",
            "tower(x; g=y; exps=[1,2]) * tower(x; g=0; exps=[1,2]) "
            "* tower(y; g=0; exps=[1,2])",
        )
        assert code == 3


class TestOutputsAndEnv:
    def test_format_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("BEHREND_FORMAT", "json")
        code, out, _ = run(capsys, "length", "m^2")
        assert code == 0
        assert json.loads(out)["length"] == 3

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BEHREND_FORMAT", "json")
        code, out, _ = run(capsys, "length", "m^2", "--format", "text")
        assert out.strip() == "length = 3"

    @pytest.mark.parametrize(
        "command,expr",
        [
            ("ferrers", "(x^3, x y, y^4)"),
            ("fan", "(x^2, x y^2, y^3)"),
            ("dynkin", "tower(x; g=0; exps=[1,2]) * tower(y; g=0; exps=[1,2,3])"),
        ],
    )
    def test_svg_outputs_are_selfcontained(self, capsys, tmp_path, command, expr):
        target = tmp_path / "out.svg"
        code, _, _ = run(capsys, command, expr, "--svg", str(target))
        assert code == 0 and target.exists()
        root = ET.fromstring(target.read_text())
        assert root.tag.endswith("svg")
        text = target.read_text()
        assert "http://" not in text.replace("http://www.w3.org/2000/svg", "")

    def test_factor_roundtrip_through_parser(self, capsys):
        code, out, _ = run(capsys, "factor", "(x^6, x^4 y, x^2 y^2, x y^3, y^5)")
        from behrend import MonomialIdeal, parse

        assert parse(out.strip()).ideal == MonomialIdeal(
            [(6, 0), (4, 1), (2, 2), (1, 3), (0, 5)]
        )
