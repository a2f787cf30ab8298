import io
import json
import subprocess
import sys

import jsonschema
import pytest

from conftest import prenotpartial_algebra, remark_algebra
from gentle_topo.cli import load_schema, run
from gentle_topo.presentation import format_text, parse


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    paths = {}
    for name, pairs in [("a", "0,0;0,0"), ("b", "1,1;0,0"), ("c", "1,1"), ("d", "3,3")]:
        code, out, _ = call(["an", "--pairs", pairs])
        assert code == 0
        paths[name] = write(f"{name}.alg", out)
    paths["remark"] = write("remark.alg", format_text(remark_algebra()))
    paths["prenot"] = write("prenot.alg", format_text(prenotpartial_algebra()))
    paths["bad"] = write(
        "bad.alg", "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2 0\narrow b 1 3 0\narrow c 1 4 0\n"
    )
    paths["twocycle"] = write("twocycle.alg", "vertex 1\nvertex 2\narrow a 1 2 0\narrow b 2 1 0\n")
    paths["write"] = write
    return paths


def test_an_then_silting(monkeypatch):
    code, out, _ = call(["an", "--pairs", "1,1"])
    code, out, _ = call(["silting"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "false"


def test_equiv_true_with_certificate(files):
    code, out, _ = call(["equiv", files["a"], files["b"]])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "true"
    assert any("genus" in ln for ln in lines[1:])


def test_equiv_false(files):
    code, out, _ = call(["equiv", files["c"], files["d"]])
    assert out.splitlines()[0] == "false"


def test_validate_not_gentle(files):
    code, out, err = call(["validate", files["bad"]])
    assert code == 1 and "NotGentle" in err
    code, out, _ = call(["--format", "json", "validate", files["bad"]])
    assert code == 1 and json.loads(out)["error"] == "NotGentle"


def test_domain_errors_exit_1(files):
    code, out, _ = call(["invariants", files["twocycle"], "--format", "json"])
    assert code == 1 and json.loads(out)["error"] == "NotProper"


def test_usage_errors_exit_2(files):
    assert call(["frobnicate"])[0] == 2
    assert call(["presilting", files["a"]])[0] == 2  # --keep missing
    assert call(["invariants", "/nonexistent/file.alg"])[0] == 2
    assert call(["invariants", files["a"], "--max-cycle-len", "0"])[0] == 2


def test_env_cycle_cap(files, monkeypatch):
    monkeypatch.setenv("GENTLE_TOPO_MAX_CYCLE_LEN", "nope")
    assert call(["invariants", files["a"]])[0] == 2
    monkeypatch.setenv("GENTLE_TOPO_MAX_CYCLE_LEN", "1")
    assert call(["invariants", files["a"]])[0] == 0


def test_presilting_and_reduce(files):
    code, out, _ = call(["presilting", files["prenot"], "--keep", "3,4"])
    assert code == 0 and "verdict: NotPartialSilting" in out
    code, out, _ = call(["reduce", files["prenot"], "--drop", "3,4"])
    assert code == 0
    assert parse(out).vertices == ("1", "2")


def test_move_and_koszul(files):
    code, out, _ = call(["--format", "json", "move", "--pairs", "1,1;1,1;1,1"])
    assert json.loads(out)["form"] == "(-1,1;1,3;1,1)"
    code, out, _ = call(["--format", "json", "koszul", files["a"]])
    assert json.loads(out)["form"] == "(2,2;2,2)"
    code, out, _ = call(["koszul", files["c"]])
    assert code == 1
    code, out, _ = call(["move", files["remark"]])
    assert code == 1


def test_an_round_trip():
    for pairs in ["1,1", "3,-2;0,5", "0,0;1,1;2,2;-3,4"]:
        code, out, _ = call(["an", "--pairs", pairs])
        A = parse(out)
        assert format_text(A) == out
        code, js, _ = call(["an", "--pairs", pairs, "--format", "json"])
        assert parse(js) == A


def test_emit_dot(files):
    code, out, _ = call(["emit-dot", files["c"]])
    assert code == 0 and "graph incidence" in out and "graph dual" in out
    code, out, _ = call(["emit-dot", files["c"], "--kind", "dual"])
    assert "graph incidence" not in out


def test_byte_deterministic(files):
    first = call(["--format", "json", "--seed", "3", "invariants", files["remark"]])
    second = call(["--format", "json", "--seed", "3", "invariants", files["remark"]])
    assert first == second


def test_batch(files, tmp_path):
    lst = tmp_path / "list.txt"
    lst.write_text("\n".join([files["a"], files["bad"], files["c"]]) + "\n")
    code, out, _ = call(["--format", "json", "--batch", str(lst), "silting"])
    data = json.loads(out)
    assert code == 1
    assert [d["ok"] for d in data] == [True, False, True]
    assert data[2]["result"] == {"has_silting": False}
    jsonschema.validate(data, load_schema("batch"))
    code, out, _ = call(["--batch", str(lst), "validate"])
    assert out.count("== ") == 3


SCHEMA_CASES = [
    ("validate", ["validate", "{a}"]),
    ("invariants", ["invariants", "{remark}"]),
    ("invariants", ["invariants", "{c}"]),
    ("equiv", ["equiv", "{a}", "{b}"]),
    ("silting", ["silting", "{c}"]),
    ("presilting", ["presilting", "{prenot}", "--keep", "3,4"]),
    ("presilting", ["presilting", "{c}", "--keep", "1"]),
    ("reduce", ["reduce", "{prenot}", "--drop", "3,4"]),
    ("an", ["an", "--pairs", "2,3"]),
    ("move", ["move", "{a}"]),
    ("koszul", ["koszul", "{a}"]),
    ("emit-dot", ["emit-dot", "{a}"]),
    ("error", ["validate", "{bad}"]),
    ("error", ["koszul", "{c}"]),
]


@pytest.mark.parametrize("schema,argv", SCHEMA_CASES)
def test_json_output_matches_schema(files, schema, argv):
    argv = ["--format", "json"] + [a.format(**files) for a in argv]
    code, out, _ = call(argv)
    jsonschema.validate(json.loads(out), load_schema(schema))


def test_console_script_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "gentle_topo.cli", "silting", files["d"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
