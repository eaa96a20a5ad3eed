import json
import shutil
import subprocess
import sys

import pytest

from ternlat import catalog
from ternlat.cli import main, theta_string
from ternlat.lattice import loads


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_console_script_installed():
    exe = shutil.which("ternlat")
    assert exe is not None
    r = subprocess.run([exe, "list", "--filter", "dim=8"], capture_output=True, text=True)
    assert r.returncode == 0 and "e8" in r.stdout


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "ternlat.cli", "theta", "e8", "--max", "4"],
                       capture_output=True, text=True)
    assert r.stdout.strip() == "1 + 240q^4"


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "t24 (leech, lambda24)" in out
    assert "[stated]" in out and "[derived]" in out


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--json", "--filter", "dim=12")
    names = {e["name"] for e in json.loads(out)}
    assert {"k12_codes", "k14_2_sub12", "w12"} <= names


def test_build_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "e8")
    assert code == 0 and loads(out).rank == 8
    p = tmp_path / "t10.json"
    code, _, err = run(capsys, "build", "lambda10", "-o", str(p))
    assert code == 0 and loads(p.read_text()).rank == 10


def test_build_errors(capsys):
    assert run(capsys, "build", "nosuch")[0] == 2
    code, _, err = run(capsys, "build", "t40")
    assert code == 2 and "--code-file" in err


def test_build_t40_with_code(capsys):
    path = catalog.data_dir() / "external" / "sd20_6.txt"
    code, out, _ = run(capsys, "build", "t40", "--code-file", str(path))
    assert code == 0 and loads(out).rank == 40


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "e8", "-q")[0] == 0
    assert run(capsys, "verify", "s16", "-q")[0] == 1
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "k9", "--json", "-q", "--depth", "deep")
    rep = json.loads(out)[0]
    assert rep["entry"] == "k9"
    assert {c["claim"]: c["status"] for c in rep["claims"]}["kissing"] == "pass"


def test_verify_progress_on_stderr(capsys):
    code, out, err = run(capsys, "verify", "k9", "--depth", "structural")
    assert "k9" in err and code == 0


def test_theta(capsys):
    assert run(capsys, "theta", "e8", "--max", "8")[1].strip() == "1 + 240q^4 + 2160q^8"
    assert run(capsys, "theta", "e8", "--max", "0")[1].strip() == "1"
    code, out, _ = run(capsys, "theta", "e8", "--max", "4", "--json", "--dump-short-vectors")
    data = json.loads(out)
    assert data["theta"] == [["4", 240]] and len(data["vectors"]) == 120


def test_theta_custom_scale(capsys):
    assert run(capsys, "theta", "e8", "--max", "2", "--scale", "1/18")[1].strip() == "1 + 240q^2"


def test_theta_string_fractional():
    from fractions import Fraction

    assert theta_string([(Fraction(3, 2), 4)]) == "1 + 4q^(3/2)"


def test_code(capsys):
    code, out, _ = run(capsys, "code")
    assert "golay12" in out.split()
    code, out, _ = run(capsys, "code", "golay12")
    assert out.startswith("[12,6,6] over GF(3)")
    assert "A6=264" in out
    assert run(capsys, "code", "nosuch")[0] == 2


@pytest.mark.parametrize("argv", [["theta", "e8"], ["verify", "--depth", "nope", "e8"]])
def test_argparse_errors(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2
