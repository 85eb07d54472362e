"""Command line behavior: parsing, JSON schemas, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from tcalab.cli import build_parser, main, parse_class_spec, InputError
from tcalab.ktheory import AClass, KClassK


def run_cli(args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "tcalab.cli", *args],
        capture_output=True,
        text=True,
        env=full_env,
    )


class TestClassSpec:
    def test_module_classes(self):
        cls = parse_class_spec("P[2,1]-S[1]")
        assert isinstance(cls, AClass)
        assert cls.projective.coeffs == {(2, 1): 1}
        assert cls.torsion.coeffs == {(1,): -1}

    def test_coefficients_and_empty(self):
        cls = parse_class_spec("2Q[1]+Q[0]")
        assert isinstance(cls, KClassK)
        assert cls.coeffs == {(1,): 2, (): 1}

    def test_rejects_mixed(self):
        with pytest.raises(InputError):
            parse_class_spec("L[1]+Q[1]")
        with pytest.raises(InputError):
            parse_class_spec("S[1]+L[1]")
        with pytest.raises(InputError):
            parse_class_spec("nonsense")


class TestCommands:
    def test_charpoly_golden(self):
        out = run_cli(["charpoly", "2,1"])
        assert out.returncode == 0
        doc = json.loads(out.stdout)
        assert doc["schema"] == "tcalab/1"
        assert doc["char_poly"] == [
            {"den": 3, "exponents": {"1": 1}, "num": 8},
            {"den": 1, "exponents": {"1": 2}, "num": -2},
            {"den": 3, "exponents": {"1": 3}, "num": 1},
            {"den": 1, "exponents": {"3": 1}, "num": -1},
        ]

    def test_modify_zero(self):
        doc = json.loads(run_cli(["modify", "1", "1"]).stdout)
        assert doc["result"] == "zero"

    def test_depth_golden(self):
        doc = json.loads(run_cli(["depth", "3", "5"]).stdout)
        assert doc["depth"] == 1

    def test_localcoh(self):
        doc = json.loads(run_cli(["localcoh", "2", "2"]).stdout)
        assert doc["rows"] == {
            "2": {"generator": [1], "partitions": [[1], [1, 1]]}
        }

    def test_ktheory_roundtrip(self):
        doc = json.loads(run_cli(["ktheory", "conv", "Q[2,1]"]).stdout)
        assert doc["result"]["basis"] == "L"
        coeffs = {tuple(t["partition"]): t["coeff"] for t in doc["result"]["terms"]}
        assert coeffs == {(1,): 1, (2,): 1, (1, 1): 1, (2, 1): 1}

    def test_fourier_k_class(self):
        doc = json.loads(run_cli(["fourier", "Q[2]"]).stdout)
        assert doc["result"]["basis"] == "L"
        assert doc["result"]["terms"] == [{"coeff": 1, "partition": [1, 1]}]

    def test_quiver_verify(self):
        doc = json.loads(run_cli(["quiver", "verify-bgg", "2,1"]).stdout)
        assert doc["d2_zero"] is True
        assert doc["cohomology"][0] == [{"multiplicity": 1, "partition": [2, 1]}]

    def test_exit_codes(self):
        assert run_cli(["depth", "2", "1"]).returncode == 2
        assert run_cli(["depth", "not-a-partition", "1"]).returncode == 2
        assert run_cli([]).returncode == 2
        assert run_cli(["selftest", "--size", "3"]).returncode == 0

    def test_trunc_env_var(self):
        doc = json.loads(
            run_cli(["poincare", "0", "2"], env={"TCALAB_TRUNC": "4"}).stdout
        )
        assert doc["trunc"] == 4
        assert max(c["t"] for c in doc["coefficients"]) <= 4

    def test_byte_stability(self):
        for args in (
            ["charpoly", "2,1"],
            ["hilbert", "P[2,1]-S[1]"],
            ["bgg", "2,2,1"],
            ["localcoh", "2,1", "3"],
            ["poincare", "1", "2", "--trunc", "6"],
        ):
            a = run_cli(args).stdout
            b = run_cli(args).stdout
            assert a == b and a.strip()

    def test_table_format(self):
        out = run_cli(["--format", "table", "depth", "3", "3"])
        assert out.returncode == 0
        assert "depth: 2" in out.stdout

    def test_efw_shape_json(self):
        doc = json.loads(run_cli(["efw", "1", "1", "--bound", "3"]).stdout)
        assert doc["shape"]["explicit"]["0"] == [[1]]
        assert doc["shape"]["explicit"]["2"] == [[2, 2]]
        assert doc["shape"]["tail"]["column"] == 1

    def test_fourier_module_class(self):
        doc = json.loads(run_cli(["fourier", "S[1]"]).stdout)
        assert doc["result"] == {
            "torsion": [],
            "projective": [{"coeff": -1, "partition": [1]}],
        }

    def test_ktheory_mult(self):
        doc = json.loads(run_cli(["ktheory", "mult", "L[1]", "L[1]"]).stdout)
        coeffs = {tuple(t["partition"]): t["coeff"] for t in doc["result"]["terms"]}
        assert coeffs == {(2,): 1, (1, 1): 1}

    def test_quiver_hom(self):
        doc = json.loads(run_cli(["quiver", "hom", "2", "1"]).stdout)
        assert doc["dimension"] == 1
        doc = json.loads(run_cli(["quiver", "hom", "1", "2"]).stdout)
        assert doc["dimension"] == 0


class TestMainEntry:
    def test_main_returns_zero(self, capsys):
        assert main(["modify", "2", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "schema": "tcalab/1",
            "command": "modify",
            "n": 2,
            "partition": [2],
            "result": "nonzero",
            "sign": -1,
            "target": [1, 1],
        }

    def test_selftest_failure_exits_three(self, capsys, monkeypatch):
        import tcalab.selftest as selftest_mod

        monkeypatch.setattr(
            selftest_mod,
            "CHECKS",
            [("always broken", lambda cap: "synthetic failure")],
        )
        assert main(["selftest", "--size", "2"]) == 3
        err = capsys.readouterr().err
        assert "synthetic failure" in err

    def test_parser_covers_all_subcommands(self):
        ap = build_parser()
        subs = next(
            a for a in ap._actions if isinstance(a, type(ap._subparsers._group_actions[0]))
        )
        names = set(subs.choices)
        assert {
            "charpoly",
            "hilbert",
            "modify",
            "localcoh",
            "depth",
            "bgg",
            "ktheory",
            "fourier",
            "efw",
            "poincare",
            "quiver",
            "selftest",
        } <= names
