import subprocess
import sys

import pytest

from hyperpart.cli import main

H_TEXT = "p hg 3 4 3\n0 1 3\n0 2 3\n1 2 3\n"
K4_TEXT = "p hg 3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


@pytest.fixture
def files(tmp_path):
    paths = {
        "h": tmp_path / "h.hg",
        "k4": tmp_path / "k4.hg",
        "g4": tmp_path / "g4.hg",
        "bad": tmp_path / "bad.hg",
        "cnf": tmp_path / "phi.cnf",
        "wide": tmp_path / "wide.cnf",
    }
    paths["h"].write_text(H_TEXT)
    paths["k4"].write_text(K4_TEXT)
    paths["g4"].write_text("p hg 4 5 1\n0 1 2 3\n")
    paths["bad"].write_text("p hg 3 3 1\n0 1 5\n")
    paths["cnf"].write_text("p cnf 3 1\n1 2 3 0\n")
    paths["wide"].write_text("p cnf 3 1\n1 2 0\n")
    paths["out"] = tmp_path / "out.hg"
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_np(capsys):
    code, out, _ = run(capsys, "classify", "0**0")
    assert code == 0
    assert out.splitlines() == ["verdict NPComplete", "step base-2coloring 0**0 -> 0**0"]


@pytest.mark.parametrize("pi, status", [("0*0*0", "Polynomial"), ("0*00*0", "Open"), ("000*00", "NPComplete")])
def test_classify_status(capsys, pi, status):
    code, out, _ = run(capsys, "classify", pi)
    assert code == 0 and out.startswith(f"verdict {status}\n")


def test_classify_bad_string(capsys):
    assert run(capsys, "classify", "0x0")[0] == 2


def test_solve_all_gadget(capsys, files):
    code, out, err = run(capsys, "solve", files["h"], "0*00", "--all")
    assert (code, out) == (0, "2221\n")
    assert "method fallback" in err


def test_solve_no_instance(capsys, files):
    code, out, _ = run(capsys, "solve", files["k4"], "0*00")
    assert (code, out) == (1, "")


def test_solve_truncates(capsys, files):
    code, out, _ = run(capsys, "solve", files["h"], "0***", "--all", "--limit", "3")
    assert code == 0
    assert out.splitlines()[-1] == "# truncated after 3 partitions"
    assert len(out.splitlines()) == 4


@pytest.mark.parametrize("argv", [("solve", "{h}", "0*0"), ("solve", "{bad}", "0*00"), ("solve", "{h}", "0*00", "--all", "--first")])
def test_solve_usage_errors(capsys, files, argv):
    assert run(capsys, *(a.format(**files) for a in argv))[0] == 2


def test_verify(capsys, files):
    assert run(capsys, "verify", files["h"], "0*00", "2221")[:2] == (0, "VALID\n")
    assert run(capsys, "verify", files["h"], "0*00", "1222")[:2] == (1, "1 2 3 count=0\n")
    assert run(capsys, "verify", files["h"], "0*00", "122")[0] == 2


def test_reduce_sat(capsys, files, tmp_path):
    code, out, _ = run(capsys, "reduce", "sat", files["cnf"], "-o", files["out"])
    assert (code, out) == (0, "pi 0*00\n")
    assert (tmp_path / "out.hg").read_text().startswith("p hg 3 30 31\n")
    record = (tmp_path / "out.hg.map").read_text().splitlines()
    assert record[0] == "kind sat"
    assert sum(line.startswith("v ") for line in record) == 30


def test_reduce_sigma(capsys, files):
    assert run(capsys, "reduce", "sigma", files["h"], "0*00", "-o", files["out"])[:2] == (0, "pi 0**00\n")


def test_reduce_sigma_precondition(capsys, files):
    code, _, err = run(capsys, "reduce", "sigma", files["g4"], "0*0*0", "-o", files["out"])
    assert code == 3
    assert "i=1" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (("reduce", "double", "{h}", "0*00", "-o", "{out}"), 0),
        (("reduce", "prepend0", "{h}", "0*00", "-o", "{out}"), 0),
        (("reduce", "prepend0", "{g4}", "0*0**", "-o", "{out}"), 3),
        (("reduce", "sigma", "{h}", "-o", "{out}"), 2),
        (("reduce", "sat", "{wide}", "-o", "{out}"), 2),
        (("reduce", "lift", "{h}", "-o", "{out}"), 2),
        (("reduce", "xc", "{g4}", "-o", "{out}"), 3),
    ],
)
def test_reduce_exit_codes(capsys, files, argv, code):
    assert run(capsys, *(a.format(**files) for a in argv))[0] == code


def test_reduce_xc_round_trip(capsys, files, tmp_path):
    xc = str(tmp_path / "h.xc")
    assert run(capsys, "reduce", "xc", files["h"], "-o", xc)[0] == 0
    assert (tmp_path / "h.xc").read_text().startswith("p xc 3 4\n")
    assert run(capsys, "reduce", "from-xc", xc, "-o", files["out"])[:2] == (0, "pi 0*00\n")
    assert (tmp_path / "out.hg").read_text() == H_TEXT


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "cycle", "6", "3")
    assert code == 0 and out.splitlines()[0] == "p hg 3 6 6"
    assert run(capsys, "generate", "cycle", "2", "3")[0] == 2
    first = run(capsys, "generate", "random", "7", "3", "--seed", "4")
    assert first == run(capsys, "generate", "random", "7", "3", "--seed", "4")


@pytest.mark.parametrize("suite", ["tables", "sat", "xc", "symmetry"])
def test_oracle_check_passes(capsys, suite):
    code, out, _ = run(capsys, "oracle-check", suite, "--seed", "7", "--count", "20")
    assert code == 0 and out.startswith(f"PASS {suite}")


def test_oracle_check_unknown(capsys):
    assert run(capsys, "oracle-check", "nope")[0] == 2


def test_deterministic_stdout(capsys, files):
    argv = ("solve", files["h"], "0**0", "--all")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "hyperpart", "verify", files["h"], "0*00", "2221"], capture_output=True, text=True
    )
    assert (proc.returncode, proc.stdout) == (0, "VALID\n")
