import json

import pytest

from oddwheel.cli import main
from oddwheel.families import odd_wheel, primitive
from oddwheel.formats import decode_graph6, encode_graph6
from oddwheel.graphs import disjoint_union


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_odd_wheel(capsys):
    code, out, _ = run_cli(capsys, "construct", "odd-wheel", "--k", "2")
    assert code == 0
    assert decode_graph6(out.strip()) == odd_wheel(2)


def test_construct_edgelist_format(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "core", "--k", "4", "--format", "edgelist"
    )
    assert code == 0
    assert out.splitlines()[0] == "5 7"


def test_construct_candidate_and_check(tmp_path, capsys):
    code, out, _ = run_cli(
        capsys, "construct", "candidate", "--n", "22", "--k", "4"
    )
    assert code == 0
    path = tmp_path / "cand.g6"
    path.write_text(out)
    code, out, _ = run_cli(
        capsys, "check", "odd-wheel", str(path), "--k", "4"
    )
    assert code == 0 and "absent" in out


def test_check_cycle_and_path(tmp_path, capsys):
    path = tmp_path / "c6.g6"
    path.write_text(encode_graph6(primitive("cycle", 6)) + "\n")
    code, out, _ = run_cli(capsys, "check", "cycle", str(path), "--len", "6")
    assert code == 0 and "present" in out
    code, out, _ = run_cli(capsys, "check", "path", str(path))
    assert code == 0 and "6" in out


def test_spectral_json(tmp_path, capsys):
    path = tmp_path / "k5.g6"
    path.write_text(encode_graph6(primitive("complete", 5)) + "\n")
    code, out, _ = run_cli(capsys, "spectral", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["radius"] == pytest.approx(4.0, abs=1e-9)
    assert payload["residual"] <= 1e-10


def test_walks_csv(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text(encode_graph6(primitive("complete", 3)) + "\n")
    code, out, _ = run_cli(
        capsys, "walks", str(path), "--max-walk", "3", "--format", "edgelist"
    )
    assert code == 0
    assert out.splitlines() == ["level,count", "1,6", "2,12", "3,24"]


def test_compare_equiv(tmp_path, capsys):
    a = tmp_path / "a.g6"
    b = tmp_path / "b.g6"
    a.write_text(encode_graph6(primitive("cycle", 6)) + "\n")
    b.write_text(
        encode_graph6(disjoint_union([primitive("cycle", 3)] * 2)) + "\n"
    )
    code, out, _ = run_cli(capsys, "compare", str(a), str(b))
    assert code == 0 and out.strip() == "EQUIV"


def test_enumerate_stream(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--kind", "V", "--degree", "4", "--order", "11"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert all(decode_graph6(ln).order == 11 for ln in lines)


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "lemma-3.3", "--delta", "3", "--n", "13"
    )
    assert code == 0
    assert json.loads(out)["outcome"] == "PASS"


def test_verify_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "verify", "lemma-3.3", "--delta", "3", "--n", "11"
    )
    assert code == 2 and "error" in err


def test_verify_fail_exit_one(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "claim-1-thm-1.4", "--k", "4", "--n-values", "22"
    )
    assert code == 1
    assert json.loads(out)["outcome"] == "FAIL"


def test_brute_spex_cli(capsys):
    code, out, _ = run_cli(capsys, "brute-spex", "--n", "5", "--k", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["evidence"]["classes"] == 34


def test_out_file(tmp_path, capsys):
    target = tmp_path / "w5.g6"
    code, out, _ = run_cli(
        capsys, "construct", "odd-wheel", "--k", "2", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert decode_graph6(target.read_text()) == odd_wheel(2)


def test_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "check", "path", "/nonexistent.g6")
    assert code == 2
