import json

import pytest

from pcpalab import io
from pcpalab.cli import main
from pcpalab.workbench import GOLDEN_TRACE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_trace_prints_golden_output(capsys):
    code, out, err = run(capsys, "run", "builtin:power-of-two-pcpa", "--input", "aaaaaaaa", "--trace")
    assert code == 0
    assert out == GOLDEN_TRACE.read_text(encoding="utf-8")
    assert "accepted" in err


@pytest.mark.parametrize("word, code", [("aaaa", 0), ("aaa", 1), ("", 1)])
def test_run_exit_codes(capsys, word, code):
    assert run(capsys, "run", "builtin:power-of-two-pcpa", "--input", word)[0] == code


def test_run_inconclusive(capsys):
    code, out, _ = run(capsys, "run", "builtin:power-of-two-pcpa", "--input", "a" * 16,
                       "--max-depth", "3", "--json")
    assert code == 2
    assert json.loads(out)["verdict"] == "inconclusive_budget"


def test_run_register_program(capsys):
    code, out, _ = run(capsys, "run", "builtin:parity-rm", "--input", "aa", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "accepted"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "builtin:otto-2head", "--max-len", "5")
    assert code == 0
    assert out.split() == ["aaaaa", "ababa", "babab", "bbbbb"]


def test_equiv(capsys):
    code, out, _ = run(capsys, "equiv", "builtin:otto-2head", "oracle:otto", "--max-len", "6")
    assert code == 0 and out.startswith("pass")
    code, out, _ = run(capsys, "equiv", "builtin:power-of-two-pcpa", "oracle:otto", "--max-len", "4", "--json")
    assert code == 1 and json.loads(out)["word"] == "aa"


def test_equiv_two_oracles_needs_alphabet(capsys):
    code, _, err = run(capsys, "equiv", "oracle:otto", "oracle:anbn", "--max-len", "2")
    assert code == 3 and "--alphabet" in err


def test_compile_round_trip(capsys, tmp_path):
    src = tmp_path / "p.json"
    out = tmp_path / "c.json"
    assert run(capsys, "builtin", "parity-rm", "-o", str(src))[0] == 0
    assert run(capsys, "compile", "rm-to-pcpa", str(src), "-o", str(out))[0] == 0
    data = json.loads(out.read_text())
    assert data["kind"] == "pcpa" and data["annotations"]
    assert run(capsys, "run", str(out), "--input", "aa", "--max-depth", "100000")[0] == 0


def test_compile_sync(capsys, tmp_path):
    out = tmp_path / "mh.json"
    assert run(capsys, "compile", "pcpa-to-mhpda", "builtin:palindrome-pcpa", "-o", str(out))[0] == 0
    assert io.load(out).heads == 2
    assert run(capsys, "run", str(out), "--input", "abba")[0] == 0


def test_compile_wrong_direction(capsys):
    code, _, err = run(capsys, "compile", "rm-to-pcpa", "builtin:otto-2head")
    assert code == 3 and "register-machine" in err


def test_compile_sync_rejects_epsilon(capsys, tmp_path):
    out = tmp_path / "c.json"
    run(capsys, "compile", "rm-to-pcpa", "builtin:parity-rm", "-o", str(out))
    code, _, err = run(capsys, "compile", "pcpa-to-mhpda", str(out))
    assert code == 3 and "epsilon" in err


def test_golden(capsys, tmp_path):
    assert run(capsys, "golden")[0] == 0
    bad = tmp_path / "g.trace"
    bad.write_text("nope\n")
    code, out, _ = run(capsys, "golden", str(bad))
    assert code == 1 and out.startswith("line 1:")


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "run", str(tmp_path / "missing.json"))[0] == 3
    assert run(capsys, "run", "builtin:nope")[0] == 3
    assert run(capsys, "run", "builtin:power-of-two-pcpa", "--input", "ab")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3


def test_invalid_machine_lists_violations(capsys, tmp_path, power_spec):
    d = io.to_dict(power_spec)
    d["query_symbols"] = ["K1", "K1"]
    path = tmp_path / "m.json"
    path.write_text(json.dumps(d))
    code, _, err = run(capsys, "run", str(path), "--input", "aa")
    assert code == 3 and err.startswith("error:")
