import json

import pytest

from sylvan3.cli import generate_corpus, run
from sylvan3.ideal_staircase import leq


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_both_methods(capsys):
    code, out, _ = call(capsys, "matrix", "--gens", "xy,y^3,z", "--from", "131", "--to", "111",
                        "--hom", "1", "--method", "both")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "sylvan3/1"
    assert doc["equal"] is True
    assert doc["oracle"]["rows"] == ["x", "y", "z"]
    assert doc["oracle"]["cols"] == ["xy", "xz", "yz"]
    assert doc["closed"]["entries"][0] == ["5/9", "0", "4/9"]


def test_betti_listing(capsys):
    code, out, _ = call(capsys, "betti", "--gens", "yz,xz,xy^2,x^2y")
    doc = json.loads(out)
    assert code == 0
    assert [e["degree"] for e in doc["betti"]["F2"]] == ["221"]
    assert sorted(e["degree"] for e in doc["betti"]["F1"]) == ["111", "121", "211", "220"]


def test_resolve_principal(capsys):
    code, out, _ = call(capsys, "resolve", "--gens", "x")
    doc = json.loads(out)
    assert code == 0
    assert doc["betti"]["F0"] == [{"degree": "100", "rank": 1}]
    assert doc["blocks"] == []


def test_resolve_macaulay2(capsys):
    code, out, _ = call(capsys, "resolve", "--gens", "xy,y^3,z", "--format", "macaulay2")
    assert code == 0 and out.startswith("R = QQ[x,y,z")


def test_ideal_file_and_comma_degrees(tmp_path, capsys):
    f = tmp_path / "ideal.txt"
    f.write_text("# worked example\nxy\n0 3 0\nz\n", encoding="utf-8")
    code, out, _ = call(capsys, "koszul", "--ideal", str(f), "--degree", "1,3,1", "--format", "text")
    assert code == 0 and "ThreeEdgesHollow" in out


def test_paths_and_hedges(capsys):
    code, out, _ = call(capsys, "paths", "--gens", "xy,y^3,z", "--from", "131", "--to", "111",
                        "--profile")
    (p,) = json.loads(out)["paths"]
    assert p["r"] == 1 and p["taxonomy_valid"]
    code, out, _ = call(capsys, "hedges", "--gens", "xy,y^3,z", "--degree", "121")
    assert json.loads(out)["delta"] == {"T": 1, "S": 3, "ST": 3}


def test_verify_and_crosscheck(capsys):
    code, out, _ = call(capsys, "verify", "--gens", "yz,xz,xy^2,x^2y", "--method", "both")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = call(capsys, "crosscheck", "--seed", "3", "--count", "5", "--max-exponent", "4")
    assert code == 0 and json.loads(out)["failing"] == 0


def test_matrix_with_paths(capsys):
    code, out, _ = call(capsys, "matrix", "--gens", "yz,xz,xy^2,x^2y", "--from", "221",
                        "--to", "111", "--hom", "1", "--paths")
    paths = json.loads(out)["paths"]
    assert len(paths) == 2
    assert all(p["hedgerows"] == p["delta"] for p in paths)


@pytest.mark.parametrize(
    "argv",
    [
        ["matrix", "--gens", "x, w", "--from", "1", "--to", "0", "--hom", "1"],
        ["betti"],
        ["koszul", "--gens", "x", "--degree", "12"],
        ["paths", "--gens", "x", "--from", "000", "--to", "100"],
        ["betti", "--gens", "x", "--format", "macaulay2"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(run(argv))
    assert exc.value.code == 2


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("SYLVAN3_THREADS", "3")
    code, out, _ = call(capsys, "verify", "--gens", "xy,y^3,z")
    assert code == 0


def test_seeded_output_is_byte_identical(capsys):
    _, first, _ = call(capsys, "corpus", "--seed", "1", "--count", "4")
    _, second, _ = call(capsys, "corpus", "--seed", "1", "--count", "4")
    assert first == second


def test_corpus_snapshot():
    (I,) = generate_corpus(1, 1, 6)
    assert I.gens == generate_corpus(1, 1, 6)[0].gens
    assert len(I.gens) >= 2


def test_corpus_ideals_are_antichains():
    for I in generate_corpus(5, 50, 6):
        assert all(not leq(g, h) for g in I.gens for h in I.gens if g != h)
        assert (0, 0, 0) not in I.gens and len(I.gens) >= 2
