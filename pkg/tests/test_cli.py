import json

import pytest

from quiverpaths.cli import main
from quiverpaths.partitions import young_diagrams_upto


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def tsv(out):
    lines = out.strip().split("\n")
    header = lines[0].split("\t")
    return header, [dict(zip(header, l.split("\t"))) for l in lines[1:]]


def test_enumerate_level_one(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--charges", "0", "--max-energy", "3")
    assert code == 0
    header, rows = tsv(out)
    assert header == ["tuple", "weight", "energy"]
    assert rows[0] == {"tuple": "|0", "weight": "1,0;0", "energy": "0"}
    # 1-reduced diagrams are the strict partitions; energy counts boxes of even content
    expected = set()
    for Y in young_diagrams_upto(14):
        even = sum(1 for i, c in Y.cells() if (c - i) % 2 == 0)
        if len(set(Y.parts)) == len(Y.parts) and even <= 3:
            expected.add(",".join(map(str, Y.parts)) + "|0")
    assert {r["tuple"] for r in rows} == expected
    assert [int(r["energy"]) for r in rows] == sorted(int(r["energy"]) for r in rows)


def test_enumerate_is_deterministic_and_formats_agree(capsys):
    argv = ["enumerate", "--n", "1", "--charges", "0,1", "--max-energy", "2"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--jobs", "2")
    assert a == b
    _, j, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(j)
    _, rows = tsv(a)
    assert len(data) == len(rows)
    assert [d["weight"] for d in data] == [r["weight"] for r in rows]
    assert [str(d["energy"]) for d in data] == [r["energy"] for r in rows]


def test_character_tables_agree(capsys):
    code, out, _ = run(capsys, "character", "--n", "1", "--charges", "0,1", "--max-energy", "3")
    assert code == 0
    _, rows = tsv(out)
    assert rows and all(r["tuples"] == r["paths"] for r in rows)
    code, out, _ = run(capsys, "character", "--n", "1", "--max-energy", "2", "--gl")
    assert code == 0
    assert all(r["paths"] == "-" for r in tsv(out)[1])


def test_fock(capsys):
    code, out, _ = run(capsys, "fock", "F-1", "F1", "F0")
    assert code == 0
    assert tsv(out)[1] == [{"diagram": "[2,1]", "coeff": "1/1"}]
    code, out, _ = run(capsys, "fock", "E0", "--start", "[1]", "--format", "json")
    assert json.loads(out) == [{"coeff": "1/1", "diagram": []}]


def test_lift_and_reduce(capsys, monkeypatch):
    path = json.dumps({"n": 1, "charges": [0], "prefix": [[1]]})
    code, out, _ = run(capsys, "lift", "--format", "json", stdin=path, monkeypatch=monkeypatch)
    assert code == 0
    row = json.loads(out)[0]
    assert row["lift"] == [{"charge": 0, "parts": [1]}]
    assert row["energy"] == 1
    tup = json.dumps({"n": 1, "entries": [{"parts": [1, 1], "charge": 0}]})
    code, out, _ = run(capsys, "reduce", "--format", "json", stdin=tup, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)[0]["reduced"] == [{"charge": 0, "parts": []}]


def test_quiver_check(capsys, tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"mode": "cyclic", "n": 1, "segments": [{"lo": 0, "hi": 1}]}))
    code, out, _ = run(capsys, "quiver-check", str(f), "--charges", "0", "--samples", "5")
    assert code == 0
    assert tsv(out)[1][0]["predicted"] == "true"


def test_verify_fault_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--only", "delta", "--inject-fault", "delta-sign", "--max-size", "4")
    assert code == 1
    row = tsv(out)[1][0]
    assert row["status"] == "FAIL"
    assert '"Y":[1]' in row["counterexample"]
    code, _, _ = run(capsys, "verify", "--only", "delta", "--max-size", "4")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "1", "--charges", "1,0", "--max-energy", "2"],
    ["enumerate", "--charges", "0", "--max-energy", "2"],
    ["fock", "X3"],
    ["reduce", "/nonexistent.json", "--n", "1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "1"])
    assert exc.value.code == 2
