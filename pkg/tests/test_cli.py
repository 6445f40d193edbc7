import json
import subprocess
import sys

import pytest

from hopfnormal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def examples(tmp_path_factory):
    d = tmp_path_factory.mktemp("examples")
    for name in ("klein-dihedral", "symmetric:5", "supersolvable:3,2,5"):
        assert main(["examples", name, "--out", str(d)]) == 0
    return d


def test_examples_written(examples):
    names = sorted(p.name for p in examples.iterdir())
    assert names == ["klein_dihedral.txt", "supersolvable_3_2_5.txt",
                     "symmetric_5_even.txt", "symmetric_5_odd.txt"]


def test_analyze_d4_stable(capsys, examples):
    code, out, _ = run(capsys, "analyze", str(examples / "klein_dihedral.txt"))
    assert code == 0
    assert "verdict: stable" in out


def test_analyze_s5_odd(capsys, examples):
    code, out, _ = run(capsys, "analyze", str(examples / "symmetric_5_odd.txt"))
    assert code == 0
    assert "not stable; deformation quotient not conormal" in out
    assert "witness:" in out


def test_analyze_s5_even(capsys, examples):
    code, out, _ = run(capsys, "analyze", str(examples / "symmetric_5_even.txt"), "--machine")
    assert code == 0 and json.loads(out)["stable"] is True


def test_oracle_flag_agrees(capsys, examples):
    for f in ("klein_dihedral.txt", "symmetric_5_odd.txt"):
        _, a, _ = run(capsys, "analyze", str(examples / f), "--machine")
        _, b, _ = run(capsys, "analyze", str(examples / f), "--machine", "--oracle")
        assert json.loads(a)["stable"] == json.loads(b)["stable"]


def test_missing_f_is_usage_error(capsys, examples):
    code, _, err = run(capsys, "analyze", str(examples / "supersolvable_3_2_5.txt"))
    assert code == 1 and "[F]" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 1


def test_hypothesis_violation_exit_2(capsys, tmp_path):
    p = tmp_path / "degenerate.txt"
    p.write_text("[group]\ndihedral:4\n[S]\nr^2\nf\n[cocycle]\nbuiltin=trivial\n[F]\nr\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "degenerate" in err


def test_size_limit_exit_3(capsys, examples):
    code, _, _ = run(capsys, "--max-order", "50", "classify", str(examples / "symmetric_5_odd.txt"))
    assert code == 3


def test_classify(capsys, examples):
    code, out, _ = run(capsys, "classify", str(examples / "supersolvable_3_2_5.txt"))
    assert code == 0 and out.strip().endswith("simple: true")
    code, out, _ = run(capsys, "classify", str(examples / "klein_dihedral.txt"))
    assert out.strip().endswith("simple: false")


def test_machine_and_human_agree(capsys, examples):
    for f in ("klein_dihedral.txt", "symmetric_5_odd.txt", "supersolvable_3_2_5.txt"):
        _, human, _ = run(capsys, "classify", str(examples / f))
        _, machine, _ = run(capsys, "classify", str(examples / f), "--machine")
        data = json.loads(machine)
        rows = [line.split() for line in human.splitlines() if line[:6].strip().isdigit()]
        assert len(rows) == len(data["normal_subgroups"])
        for row, rec in zip(rows, data["normal_subgroups"]):
            assert int(row[0]) == rec["order"] and int(row[1]) == rec["index"]
            assert (row[2] == "yes") == rec["S_in_F"]
            assert (row[3] == "yes") == rec["stable"]
        assert f"simple: {'true' if data['simple'] else 'false'}" in human


def test_output_is_deterministic(examples):
    cmd = [sys.executable, "-m", "hopfnormal.cli", "classify",
           str(examples / "symmetric_5_odd.txt"), "--machine", "--jobs", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_jobs_do_not_change_output(capsys, examples):
    f = str(examples / "supersolvable_3_2_5.txt")
    _, one, _ = run(capsys, "classify", f)
    _, many, _ = run(capsys, "classify", f, "--jobs", "3")
    assert one == many


def test_invariant_basis(capsys, examples):
    code, out, _ = run(capsys, "invariant-basis", str(examples / "klein_dihedral.txt"), "--machine")
    data = json.loads(out)
    assert code == 0
    assert len(data["basis"]) == data["F"]["index"] == 2


def test_verify_selector(capsys):
    code, out, _ = run(capsys, "verify", "grading", "--instances", "klein-dihedral", "s4-odd")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 2 and all(l.split()[2] == "grading" for l in lines)
    assert "0 failed" in out


def test_verify_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "associativity", "--inject-fault",
                       "--instances", "klein-dihedral")
    assert code == 4
    assert "FAIL klein-dihedral+fault" in out


def test_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == 1
