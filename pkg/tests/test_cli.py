import json

import pytest

from bridgecovers.cli import main
from bridgecovers.words import parse_word, format_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_homology_json_record(capsys):
    code, rec = run_json(capsys, "homology", "5", "3", "3", "--format", "json")
    assert code == 0
    assert rec["schema_version"] == 1
    assert rec["verb"] == "homology"
    assert rec["agree"] is True
    groups = [r for r in rec["routes"] if "group" in r]
    assert len(groups) >= 4
    for r in groups:
        assert r["group"] == {"rank": 0, "torsion": [4, 4]}
    orders = [r for r in rec["routes"] if "order" in r]
    assert orders and all(r["order"] == 16 for r in orders)


def test_present_takahashi_text(capsys):
    code, out, err = run(capsys, "present", "5", "2", "4", "--method", "takahashi")
    assert code == 0
    lines = out.splitlines()
    assert "takahashi" in lines[0]
    assert lines[1] == "generators: 4"
    relators = [ln.strip() for ln in lines[2:]]
    base = parse_word("x3^-1 x2^2 x1^-1 x2")
    assert relators == [format_word(base.shift(i, 4)) for i in range(4)]


def test_gem_non_manifold_diagnostic(capsys):
    code, out, err = run(capsys, "gem", "3", "5", "3", "1")
    assert code == 0
    assert "not a manifold: some 3-residue is not a 2-sphere" in out
    code, rec = run_json(capsys, "--format", "json", "gem", "3", "5", "3", "1")
    assert rec["gem"] is False
    assert rec["covering"] is None and rec["genus"] is None


def test_format_flag_position(capsys):
    _, before = run_json(capsys, "--format", "json", "info", "5", "3")
    _, after = run_json(capsys, "info", "5", "3", "--format", "json")
    assert before == after
    assert before["kind"] == "knot" and before["genus_one"] is True


def test_info_link_fields(capsys):
    code, rec = run_json(capsys, "info", "8", "3", "--format", "json")
    assert code == 0
    assert rec["kind"] == "link"
    assert rec["linking_number"] == 0
    assert rec["continued_fraction"] == [2, 1, 2]


def test_classify_record(capsys):
    code, rec = run_json(capsys, "classify", "7", "3", "2", "1", "--format", "json")
    assert code == 0
    assert rec["classes"]["strictly"] is True
    assert rec["lens"] == [7, 3]
    assert rec["geometry"] == "spherical"


def test_gem_crystallization_record(capsys):
    code, rec = run_json(capsys, "gem", "5", "8", "3", "3", "1", "--format", "json")
    assert code == 0
    assert rec["gem"] is True and rec["crystallization"] is True
    assert rec["covering"]["alpha"] == 8 and rec["covering"]["beta"] == 3
    assert rec["covering"]["degree"] == 5
    assert rec["covering"]["exponents"] == [1, 2]
    assert rec["genus"]["by_order"]["0213"] == 4
    assert rec["genus"]["min"] == 4


def test_polyhedral_record(capsys):
    code, rec = run_json(capsys, "polyhedral", "3", "1", "5", "3", "--format", "json")
    assert code == 0
    assert rec["chi"] == 0
    assert rec["cells"] == {"t0": 2, "t1": 4, "t2": 3, "t3": 1}
    assert rec["presentation"]["generators"] == 3
    code, out, _ = run(capsys, "polyhedral", "3", "1", "5", "3")
    assert "euler characteristic: 0" in out


def test_decompose_record(capsys):
    code, rec = run_json(capsys, "decompose", "8", "3", "10", "5", "--format", "json")
    assert code == 0
    assert rec["d"] == 5
    assert rec["degrees"] == [2, 5]
    assert rec["intermediate"]["components"] == 6
    assert rec["intermediate"]["alpha1"] == 4
    assert rec["intermediate"]["beta"] == 3


def test_verify_sweep(capsys):
    code, rec = run_json(capsys, "verify", "--sweep", "6", "4", "--format", "json")
    assert code == 0
    assert rec["ok"] is True and rec["mismatches"] == []
    assert rec["checked"] > 0
    again_code, again = run_json(capsys, "verify", "--sweep", "6", "4", "--format", "json")
    assert again == rec
    code, out, _ = run(capsys, "verify", "--sweep", "6", "4")
    assert out.splitlines()[-1] == "mismatches: 0"


def test_argument_errors_exit_2(capsys):
    for argv in (("homology", "4", "2", "3"),
                 ("present", "8", "3", "3", "--method", "takahashi"),
                 ("polyhedral", "3", "1", "5", "2"),
                 ("verify", "--sweep", "1", "4")):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert "usage:" in err and "error:" in err


def test_unknown_verb_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "5", "3"])
    assert exc.value.code == 2


def test_json_roundtrip_every_verb(capsys):
    cases = [("info", "5", "3"),
             ("classify", "8", "3", "5", "1", "2"),
             ("present", "5", "3", "3"),
             ("homology", "5", "3", "3"),
             ("gem", "3", "5", "3", "2"),
             ("polyhedral", "3", "1", "5", "3"),
             ("decompose", "8", "3", "10", "5"),
             ("verify", "--sweep", "4", "3")]
    for argv in cases:
        code, rec = run_json(capsys, *argv, "--format", "json")
        assert code == 0
        assert rec["schema_version"] == 1
        assert rec["verb"] == argv[0]


def test_homology_route_filter(capsys):
    code, rec = run_json(capsys, "homology", "5", "3", "3",
                         "--routes", "minkus,resultant", "--format", "json")
    assert code == 0
    assert [r["route"] for r in rec["routes"]] == ["minkus", "resultant"]
