import json

import pytest
from click.testing import CliRunner

from skewtile.arcs import ArcMultiset, CutComplex, arc_to_dict, enumerate_arcs, multiset_to_dict
from skewtile.cli import cli
from skewtile.examples import TILINGS, odd_cycle_triple
from skewtile.quiver import triple_to_dict


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args, json_out=False):
        argv = (["-f", "json"] if json_out else []) + list(args)
        res = runner.invoke(cli, argv, catch_exceptions=False)
        return res
    return go


@pytest.fixture
def odd_arcs(tmp_path):
    cx = CutComplex(TILINGS["odd"]())
    arcs = enumerate_arcs(cx, 4)
    paths = []
    for i, a in enumerate(arcs):
        p = tmp_path / f"arc{i}.json"
        p.write_text(json.dumps(arc_to_dict(cx, a)))
        paths.append(str(p))
    return cx, arcs, paths


def test_build_all(run):
    res = run("build", "odd", json_out=True)
    assert res.exit_code == 0
    assert set(json.loads(res.output)) == {"g", "sp", "sg", "bowtie", "star"}


def test_cartan_human_and_json(run):
    res = run("cartan", "odd", "--which", "sp")
    assert res.exit_code == 0 and "det = 4" in res.output
    doc = json.loads(run("cartan", "odd", "--which", "sg", json_out=True).output)
    rows = doc["sg"]["rows"] if "sg" in doc else doc["rows"]
    assert rows == [[1, 0, 0, 1], [0, 1, 0, 1], [1, 1, 1, 1], [0, 0, 1, 1]]


def test_json_output_is_deterministic(run):
    a = run("cartan", "even", json_out=True).output
    b = run("cartan", "even", json_out=True).output
    assert a == b


def test_cartan_from_a_triple_file(run, tmp_path):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(triple_to_dict(odd_cycle_triple())))
    assert run("cartan", str(p), "--which", "g").exit_code == 0


def test_cycles(run):
    res = run("cycles", "even", json_out=True)
    assert res.exit_code == 0
    assert "a1" in res.output


def test_check_exit_codes(run):
    assert run("check", "odd").exit_code == 0
    res = run("check", "even")
    assert res.exit_code == 1 and "a1" in res.output


def test_malformed_json_exits_with_2(run, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"vertices": [1,\n')
    res = run("cartan", str(p))
    assert res.exit_code == 2 and "line" in res.output


def test_missing_file_exits_with_2(run):
    assert run("check", "/nonexistent/triple.json").exit_code == 2


def test_wrong_format_exits_with_2(run, tmp_path):
    p = tmp_path / "t.json"
    p.write_text(json.dumps({"format": "something/else"}))
    assert run("check", str(p)).exit_code == 2


def test_tiling_commands(run):
    assert run("tiling", "list").output.split() == sorted(TILINGS)
    assert run("tiling", "validate", "even").output.startswith("valid")
    doc = json.loads(run("tiling", "validate", "even", json_out=True).output)
    assert doc["ok"] and doc["obstruction_tiles"] == ["sq"]
    assert "1*" in run("tiling", "unfold", "odd").output
    assert json.loads(run("tiling", "algebra", "odd").output)["triple"]["special"] == ["1"]
    assert run("tiling", "tagged", "odd").output.split() == ["1-", "1+", "2", "3"]
    assert run("tiling", "svg", "odd").output.startswith("<svg")
    assert run("tiling", "original", "odd").exit_code == 0


def test_invalid_tiling_exits_with_1(run, tmp_path):
    doc = TILINGS["square"]().to_dict()
    doc["tiles"] = doc["tiles"][:1]
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    res = run("tiling", "validate", str(p))
    assert res.exit_code == 1 and "invalid" in res.output


def test_arcs_enumerate(run):
    res = run("arcs", "enumerate", "-t", "odd", json_out=True)
    assert len(json.loads(res.output)) == 12
    assert run("arcs", "enumerate", "-t", "odd").output.startswith("12 arcs")


def test_arcs_validate_and_int(run, odd_arcs):
    cx, arcs, paths = odd_arcs
    assert run("arcs", "validate", paths[0], "-t", "odd").output.strip() == "permissible"
    i = next(k for k, a in enumerate(arcs) if a.slots == arcs[2].slots and k != 2)
    doc = json.loads(run("arcs", "int", paths[2], paths[i], "-t", "odd", json_out=True).output)
    assert (doc["A"], doc["C"], doc["D"], doc["total"]) == (0, -1, 1, 0)


def test_arcs_wrong_arity_exits_with_2(run, odd_arcs):
    assert run("arcs", "int", odd_arcs[2][0], "-t", "odd").exit_code == 2


def test_vector_and_special_set(run, odd_arcs, tmp_path):
    cx, arcs, _ = odd_arcs
    notched = next(a for a in arcs if a.tags.count("notched") == 1)
    p = tmp_path / "m.json"
    p.write_text(json.dumps(multiset_to_dict(cx, ArcMultiset([notched]))))
    doc = json.loads(run("arcs", "vector", str(p), "-t", "odd", json_out=True).output)
    assert doc["labels"] == ["1-", "1+", "2", "3"] and doc["S"] == ["P"]


def test_unfold_map_round_trip(run, odd_arcs, tmp_path):
    cx, arcs, _ = odd_arcs
    plain = next(a for a in arcs if len(a.slots) == 2 and "P" in a.ends and a.tags == ("plain", "plain"))
    notched = next(a for a in arcs if a.slots == plain.slots and a != plain)
    src = tmp_path / "m.json"
    src.write_text(json.dumps(multiset_to_dict(cx, ArcMultiset([plain, notched]))))
    out = run("unfold-map", "Phi", str(src), "-t", "odd")
    assert out.exit_code == 0 and len(json.loads(out.output)["arcs"]) == 1
    img = tmp_path / "img.json"
    img.write_text(out.output)
    back = json.loads(run("unfold-map", "recover", str(img), "-t", "odd").output)
    assert back == multiset_to_dict(cx, ArcMultiset([plain, notched]))
    res = run("unfold-map", "check-lemma32", str(src), "-t", "odd")
    assert res.exit_code == 0 and "FAIL" not in res.output


def test_unfold_map_phi_single_arc(run, odd_arcs):
    _, _, paths = odd_arcs
    assert run("unfold-map", "phi", paths[0], "-t", "odd").exit_code == 0


def test_recover_outside_image_fails_cleanly(run, tmp_path):
    from skewtile.unfolding import FoldingContext
    from skewtile.errors import ArcError
    ctx = FoldingContext(TILINGS["odd"]())
    for a in enumerate_arcs(ctx.cx_star, 4):
        try:
            ctx.recover(ArcMultiset([a]))
        except ArcError:
            break
    p = tmp_path / "m.json"
    p.write_text(json.dumps(multiset_to_dict(ctx.cx_star, ArcMultiset([a]))))
    res = run("unfold-map", "recover", str(p), "-t", "odd")
    assert res.exit_code == 1 and "not in the image" in res.output


def test_equivalence_and_injectivity_commands(run):
    doc = json.loads(run("unfold-map", "check-thm34", "-t", "two", "--max-size", "2", json_out=True).output)
    assert doc["agree"]
    doc = json.loads(run("unfold-map", "check-thm36", "-t", "even", json_out=True).output)
    assert not doc["injective"] and not doc["hypothesis_holds"] and len(doc["example"]) == 2
    doc = json.loads(run("unfold-map", "check-thm36", "-t", "odd", json_out=True).output)
    assert doc["injective"] and doc["hypothesis_holds"]


def test_demo_outputs(run):
    odd = run("demo", "ex51").output
    assert "determined: yes" in odd
    for d in ("det = 2", "det = 4"):
        assert d in odd
    even = run("demo", "ex52").output
    assert "determined: no" in even and "a1 -> a2 -> a3 -> a4" in even
    doc = json.loads(run("demo", "ex52", json_out=True).output)
    assert {m["det"] for m in doc["cartan"].values()} == {0}


def test_selftest(run):
    res = run("selftest")
    assert res.exit_code == 0 and "FAIL" not in res.output
