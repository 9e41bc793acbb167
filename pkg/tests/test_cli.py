import json

import pytest

from primaldyn.cli import main, parse_map, MalformedInput
from primaldyn.fgraph import load_map


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_formats():
    assert parse_map('{"n": 3, "succ": [1, 2, 0]}')[0] == load_map([1, 2, 0])
    assert parse_map("[1, 2, 0]")[0] == load_map([1, 2, 0])
    assert parse_map(" 1 2 0\n")[0] == load_map([1, 2, 0])
    for bad in ["", "1 x", '{"n": 2, "succ": [0]}', '{"succ": [0, 5]}', "{", '{"succ": [true]}']:
        with pytest.raises(MalformedInput):
            parse_map(bad)


def test_generate_then_analyze_tower(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["generate", "--family", "tower", "--m", "2", "--n", "2", "--J", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["succ"] == [4, 4, 5, 5, 0, 0, 1, 1]
    code, out, _ = run(capsys, monkeypatch, ["analyze"], stdin=out)
    assert code == 0
    rep = json.loads(out)
    assert rep["map"]["succ"] == doc["succ"]
    assert rep["system"]["recurrent_set"] == [0, 4]
    assert any("truncation" in c for c in rep["caveats"])
    assert set(rep["theorems"].values()) == {"pass"}


def test_analyze_cycle(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze"], stdin="1 2 0")
    rep = json.loads(out)
    assert code == 0
    assert rep["system"]["transitive"] and rep["system"]["strongly_mixing"]
    assert rep["open_set_count"] == 2
    assert list(rep)[:3] == ["schema_version", "map", "family"]


def test_analyze_is_byte_identical(capsys, monkeypatch, tmp_path):
    src = tmp_path / "map.json"
    src.write_text(json.dumps({"n": 9, "succ": [3, 0, 6, 3, 1, 1, 7, 6, 8]}))
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, monkeypatch, ["analyze", str(src)])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    target = tmp_path / "r.json"
    assert main(["analyze", str(src), "-o", str(target)]) == 0
    assert target.read_text() == outs[0]


@pytest.mark.parametrize("family, args", [
    ("mod-mul", ["--m", "3", "--N", "10"]),
    ("random", ["--n", "11", "--seed", "5"]),
    ("tower", ["--m", "3", "--n", "2", "--J", "4"]),
])
def test_generate_round_trip(capsys, monkeypatch, family, args):
    code, out, _ = run(capsys, monkeypatch, ["generate", "--family", family, *args])
    doc = json.loads(out)
    f, fam = parse_map(out)
    assert f.to_list() == doc["succ"] and fam["family"] == family


def test_malformed_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["analyze"], stdin="0 0 3")
    assert code == 1 and "not in" in err
    code, _, _ = run(capsys, monkeypatch, ["analyze", "/nonexistent/file"])
    assert code == 1


def test_check_exit_codes(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["check", "--exhaustive-upto", "3"])
    assert code == 0 and "0 failures" in err
    code, _, _ = run(capsys, monkeypatch, ["check", "--exhaustive-upto", "9"])
    assert code == 2
    code, _, _ = run(capsys, monkeypatch, ["check", "--exhaustive-upto", "0", "--random", "1", "--n-max", "13"])
    assert code == 2


def test_check_reports_failing_instance(capsys, monkeypatch):
    from primaldyn import checks

    def broken(f):
        return f.n != 2

    monkeypatch.setattr(checks, "THEOREMS", checks.THEOREMS + (checks.Theorem("broken", "", broken),))
    code, out, _ = run(capsys, monkeypatch, ["check", "--exhaustive-upto", "2", "--no-oracle"])
    assert code == 3
    failures = json.loads(out)["failures"]
    assert {tuple(fl["succ"]) for fl in failures} == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert all(fl["check"] == "broken" for fl in failures)


def test_dot(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["dot"], stdin="[1, 0, 0, 3]")
    assert code == 0
    assert out.startswith("digraph primal {")
    assert "0 -> 1 [style=bold" in out and "2 -> 0;" in out
    assert "cluster_min0" in out and "cluster_min1" in out
