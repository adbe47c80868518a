import csv
import io
import json
import os
import subprocess
import sys
from fractions import Fraction as Fr

import pytest

from posetzeta import (
    build_poset,
    build_Pn,
    f_number,
    poset_from_dict,
    poset_to_dict,
    save_poset,
    strict_chain_vector,
)
from posetzeta.cli import fmt_rational, main, parse_rational, run_to_string


def write_p6(tmp_path):
    p = build_poset(["2", "3", "5", "6"], [("2", "6"), ("3", "6")])
    path = tmp_path / "p6.json"
    save_poset(p, path)
    return str(path)


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_fmt_parse_round_trip():
    for x in (Fr(3, 4), Fr(-7, 11), Fr(5), Fr(0), Fr(-2)):
        assert parse_rational(fmt_rational(x)) == x
    assert fmt_rational(None) == "NA"
    assert parse_rational("NA") is None
    assert fmt_rational(Fr(6, 4)) == "3/2"


class TestTables:
    def test_f_csv(self):
        header, rows = parse_csv(
            run_to_string(["tables", "--kind", "f", "--dmax", "3"])
        )
        assert header == ["i", "d", "value"]
        cells = {(int(i), int(d)): v for i, d, v in rows}
        assert cells[(2, 3)] == "36"
        assert cells[(3, 1)] == "0"
        assert len(rows) == 16

    def test_H_json(self):
        doc = json.loads(
            run_to_string(
                ["tables", "--kind", "H", "--dmax", "3", "--format", "json"]
            )
        )
        cells = {(row["i"], row["d"]): row["value"] for row in doc}
        assert cells[(2, 3)] == "7/11"
        assert cells[(0, 3)] == "0"
        assert cells[(1, 0)] == "1"

    def test_F_values_parse_back(self):
        _, rows = parse_csv(
            run_to_string(["tables", "--kind", "F", "--dmax", "5"])
        )
        cells = {(int(i), int(d)): parse_rational(v) for i, d, v in rows}
        assert cells[(2, 5)] == Fr(45, 29)
        assert cells[(0, 4)] == Fr(1, 19)


class TestZetaCommand:
    def test_json(self, tmp_path):
        doc = json.loads(
            run_to_string(
                ["zeta", "--input", write_p6(tmp_path), "--format", "json"]
            )
        )
        assert doc == {
            "numerator": ["4", "-2"],
            "denominator": ["1", "-2", "1"],
        }

    def test_csv(self, tmp_path):
        header, rows = parse_csv(
            run_to_string(["zeta", "--input", write_p6(tmp_path)])
        )
        assert header == ["part", "exponent", "coefficient"]
        assert ["numerator", "0", "4"] in rows


class TestSubdivideCommand:
    def test_json_round_trips_into_builder(self, tmp_path):
        text = run_to_string(
            ["subdivide", "--input", write_p6(tmp_path), "--times", "2"]
        )
        q = poset_from_dict(json.loads(text))
        assert strict_chain_vector(q).counts == (10, 8)
        # One more pass through the dict form is stable.
        assert poset_to_dict(q) == json.loads(
            run_to_string(
                ["subdivide", "--input", write_p6(tmp_path), "--times", "2"]
            )
        )


class TestZerosCommands:
    def test_zeros_csv(self, tmp_path):
        header, rows = parse_csv(
            run_to_string(
                [
                    "zeros",
                    "--input",
                    write_p6(tmp_path),
                    "--kmax",
                    "4",
                    "--precision-bits",
                    "128",
                ]
            )
        )
        assert header[0] == "k" and header[-1] == "precision_bits"
        assert len(rows) == 5
        assert rows[-1][-1] == "128"
        # beta1 at k = 4 is exactly 17.
        assert float(rows[-1][1]) == 17.0
        assert float(rows[-1][2]) == 0.0

    def test_theorem_check_json(self, tmp_path):
        p30 = tmp_path / "p30.json"
        save_poset(build_Pn(30), p30)
        doc = json.loads(
            run_to_string(
                [
                    "theorem-check",
                    "--input",
                    str(p30),
                    "--kmax",
                    "5",
                    "--precision-bits",
                    "128",
                    "--format",
                    "json",
                ]
            )
        )
        assert len(doc["rows"]) == 6
        assert doc["beta1_real_from_k0"] is True
        assert doc["modulus_increasing_from_k0"] is True
        assert abs(float(doc["es_ratio_final"]) - 1) < 0.05


class TestPnCommands:
    def test_chi(self):
        header, rows = parse_csv(
            run_to_string(["pn", "chi", "--range", "2:10"])
        )
        assert header == ["n", "chi"]
        assert rows[0] == ["2", "1"]
        assert rows[-1] == ["10", "2"]

    def test_alpha(self):
        header, rows = parse_csv(
            run_to_string(["pn", "alpha", "--range", "5:6"])
        )
        assert header == [
            "n", "chi", "mertens", "dim", "top_chains", "H1", "alpha",
        ]
        # Below the first interesting n the constant is undefined.
        assert rows[0][0] == "5" and rows[0][-1] == "NA"
        assert rows[1] == ["6", "2", "-1", "1", "2", "1", "1"]

    def test_bad_range(self):
        assert main(["pn", "chi", "--range", "10:2"]) == 2
        assert main(["pn", "chi", "--range", "nope"]) == 2


def test_pi_weight_and_dim_report():
    header, rows = parse_csv(
        run_to_string(["pi-weight", "--d", "2", "--x", "30"])
    )
    assert header == ["d", "x", "count"]
    assert rows == [["2", "30", "7"]]
    header, rows = parse_csv(run_to_string(["dim-report", "--n", "30,210"]))
    assert [r[1] for r in rows] == ["2", "3"]
    assert all(r[-1] == "1" for r in rows)


class TestExitCodes:
    def test_success_and_output_file(self, tmp_path):
        out = tmp_path / "f.csv"
        assert main(
            ["tables", "--kind", "f", "--dmax", "2", "--output", str(out)]
        ) == 0
        assert out.read_text().startswith("i,d,value")

    def test_invalid_config(self):
        assert main(["tables", "--kind", "f", "--dmax", "-1"]) == 2
        assert main(["zeros", "--input", "x", "--precision-bits", "40"]) == 2

    def test_computation_error(self, tmp_path):
        antichain = tmp_path / "anti.json"
        save_poset(build_poset(["a", "b"], []), antichain)
        assert main(["zeros", "--input", str(antichain)]) == 3

    def test_resource_cap(self, tmp_path):
        assert main(
            [
                "subdivide",
                "--input",
                write_p6(tmp_path),
                "--times",
                "3",
                "--cap",
                "10",
            ]
        ) == 4

    def test_missing_file(self, tmp_path):
        assert main(["zeta", "--input", str(tmp_path / "absent.json")]) == 2


class TestDeterminism:
    def test_repeated_runs_byte_identical(self, tmp_path):
        argv = [
            "zeros",
            "--input",
            write_p6(tmp_path),
            "--kmax",
            "3",
            "--precision-bits",
            "128",
        ]
        assert run_to_string(argv) == run_to_string(argv)

    def test_installed_entry_point(self, tmp_path):
        res = subprocess.run(
            [sys.executable, "-m", "posetzeta.cli", "tables", "--kind", "H",
             "--dmax", "2"],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0
        assert res.stdout == run_to_string(
            ["tables", "--kind", "H", "--dmax", "2"]
        )


def test_memo_cache_round_trip(tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    cache.mkdir()
    monkeypatch.setenv("POSET_ZETA_CACHE", str(cache))
    first = run_to_string(["tables", "--kind", "F", "--dmax", "6"])
    assert (cache / "f_numbers.csv").exists()
    assert (cache / "big_f_numbers.csv").exists()
    # A fresh process must reproduce the same table from the cache.
    env = dict(os.environ, POSET_ZETA_CACHE=str(cache))
    res = subprocess.run(
        [sys.executable, "-m", "posetzeta.cli", "tables", "--kind", "F",
         "--dmax", "6"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert res.returncode == 0
    assert res.stdout == first
    # Cached entries still agree with direct recomputation.
    assert f_number(3, 5) == 1560
