import csv
import io
import json
import subprocess
import sys

import pytest

from discstrata.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines()]


class TestClassify:
    def test_smooth_point(self):
        code, out, _ = run("classify", "x^4+2*x^2+8*x+5")
        rep = json.loads(out)
        assert code == 0
        assert rep["m_gcd"] == 3 and rep["ord_D"] == 1 and rep["hypersurface_singular"] is False

    def test_fourth_power(self):
        rep = json.loads(run("classify", "x^4")[1])
        assert rep["m_gcd"] == 1 and rep["ord_D"] == 3

    def test_off_hypersurface(self):
        rep = json.loads(run("classify", "x^2+1")[1])
        assert rep["m_gcd"] == 2 and rep["on_hypersurface"] is False

    @pytest.mark.parametrize("method", ["gcd", "subdisc", "order", "tval"])
    def test_single_method(self, method):
        code, out, _ = run("classify", "(x-1)^3*(x-2)", "--method", method)
        assert code == 0 and json.loads(out) == {"n": 4, "method": method, "m": 2}

    def test_beyond_symbolic_range(self):
        assert run("classify", "x^9 - 1")[0] == 2
        code, out, _ = run("classify", "x^9 - 1", "--method", "tval")
        assert code == 0 and json.loads(out)["m"] == 9

    def test_non_monic_warning(self):
        code, out, err = run("classify", "3x^2 - 3")
        assert code == 0 and "warning" in err
        assert json.loads(out)["m_gcd"] == 2

    @pytest.mark.parametrize("text", ["x + 1", "(x", "x^-1", "y^2", ""])
    def test_usage_errors(self, text):
        code, _, err = run("classify", text)
        assert code == 2 and "error" in err

    def test_byte_stable(self):
        assert run("classify", "x^5 - x")[1] == run("classify", "x^5 - x")[1]


class TestGeneric:
    def test_cubic(self):
        code, out, _ = run("generic", "3", "discriminant")
        assert out.strip() == "-4*a_2^3*a_0 + a_2^2*a_1^2 + 18*a_2*a_1*a_0 - 4*a_1^3 - 27*a_0^2"

    def test_quartic_term_count(self):
        out = json.loads(run("generic", "4", "discriminant", "--json")[1])
        assert out["terms"] == 16

    def test_subdiscriminants(self):
        out = run("generic", "4", "subdiscriminants")[1].splitlines()
        assert out[-1] == "D_3 = 4"
        assert len(out) == 4

    def test_range(self):
        assert run("generic", "8", "discriminant")[0] == 2
        assert run("generic", "1", "discriminant")[0] == 2


class TestSample:
    def test_three_points(self):
        code, out, _ = run("sample", "2,1,1", "--seed", "7", "--count", "3")
        recs = lines(out)
        assert code == 0 and len(recs) == 3
        assert all(r["report"]["m_gcd"] == 3 and r["report"]["consistent"] for r in recs)

    def test_fourth_power(self):
        rec = lines(run("sample", "4", "--seed", "1")[1])[0]
        assert rec["report"]["m_gcd"] == 1

    def test_triple_root(self):
        rec = lines(run("sample", "3,1", "--seed", "9")[1])[0]
        assert rec["report"]["m_gcd"] == 2

    @pytest.mark.parametrize("bad", ["2,0", "a", "9,9"])
    def test_invalid(self, bad):
        assert run("sample", bad)[0] == 2


class TestVerify:
    def test_quadratic(self):
        code, out, _ = run("verify", "--degree", "2", "--trials", "1", "--seed", "0")
        assert code == 0 and json.loads(out)["passed"]

    def test_quartic_default_trials(self):
        code, out, _ = run("verify", "--degree", "4", "--trials", "25", "--seed", "42")
        assert code == 0
        assert json.loads(out)["trials"] == 125

    def test_out_of_range(self):
        assert run("verify", "--degree", "9", "--trials", "1")[0] == 2

    def test_missing_flag(self):
        assert run("verify")[0] == 2


class TestSurfaceCommand:
    def test_stdout(self):
        code, out, _ = run("surface", "--degree", "3", "--resolution", "3")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and len(rows) == 28

    def test_file_and_slice(self, tmp_path):
        path = tmp_path / "slice.csv"
        code, _, err = run("surface", "--degree", "4", "--fix", "a_3=0", "--range=-4:4",
                           "--resolution", "9", "--out", str(path))
        assert code == 0 and "729 rows" in err
        rows = list(csv.DictReader(path.open()))
        hit = [r for r in rows if (r["a_0"], r["a_1"], r["a_2"]) == ("4", "0", "4")]
        assert hit[0]["D"] == "0" and hit[0]["m"] == "2"

    def test_cap(self):
        assert run("surface", "--degree", "3", "--resolution", "50", "--cap", "100")[0] == 2

    @pytest.mark.parametrize("flag", [["--range", "3"], ["--fix", "b=2"], ["--range", "a_9=0:1"]])
    def test_bad_flags(self, flag):
        assert run("surface", "--degree", "4", *flag)[0] == 2


class TestConjecture:
    def test_cubic(self):
        code, out, _ = run("conjecture", "--degree", "3", "--k", "1")
        res = json.loads(out)
        assert code == 0 and res["smallest"] == 2

    def test_quartic_mismatch_exit(self):
        code, out, _ = run("conjecture", "--degree", "4", "--k", "1")
        assert code == 3 and json.loads(out)["smallest"] == 1

    def test_whitelist(self):
        assert run("conjecture", "--degree", "5", "--k", "2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "discstrata", "classify", "x^3 - 3*x + 2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m_gcd"] == 2
