import json

import pytest

from smashkit import serialize
from smashkit.catalog import GroupTable, group_algebra, sweedler
from smashkit.cli import main
from smashkit.fields import FieldSpec

QQ = FieldSpec.rational()


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_sweedler_then_check_hopf(tmp_path, capsys):
    f = tmp_path / "h4.json"
    code, _, _ = run(["catalog", "sweedler", "-o", str(f)], capsys)
    assert code == 0
    code, out, _ = run(["check", str(f), "--as", "hopf"], capsys)
    assert code == 0
    assert "PASS" in out


def test_check_corrupted_mult_fails(tmp_path, capsys):
    f = tmp_path / "h4.json"
    run(["catalog", "sweedler", "-o", str(f)], capsys)
    doc = json.loads(f.read_text())
    # flip the sign of one multiplication constant
    for e in doc["mult"]:
        if e["c"] == "-1":
            e["c"] = "1"
            break
    f.write_text(json.dumps(doc))
    code, out, _ = run(["check", str(f), "--as", "hopf"], capsys)
    assert code == 1
    assert "FAIL" in out


def test_roundtrip_canonical(tmp_path, capsys):
    f = tmp_path / "h4.json"
    run(["catalog", "sweedler", "-o", str(f)], capsys)
    doc = serialize.load(str(f))
    obj = serialize.object_from_json(doc, "h4")
    again = serialize.dumps(serialize.object_to_json(obj.as_hopf()))
    assert again == f.read_text()


def test_load_rejects_out_of_range_entry(tmp_path, capsys):
    f = tmp_path / "bad.json"
    doc = serialize.object_to_json(group_algebra(GroupTable.cyclic(2), QQ))
    doc["antipode"] = {"rows": 2, "cols": 2, "entries": [{"r": 5, "c": 0, "v": "1"}]}
    f.write_text(json.dumps(doc))
    code, _, err = run(["check", str(f), "--as", "hopf"], capsys)
    assert code == 2
    assert "outside" in err


def test_load_rejects_missing_format(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{}")
    code, _, err = run(["check", str(f), "--as", "algebra"], capsys)
    assert code == 2


def test_load_rejects_mixed_fields(tmp_path, capsys):
    a = serialize.object_to_json(group_algebra(GroupTable.cyclic(2), QQ).algebra)
    b = serialize.object_to_json(
        group_algebra(GroupTable.cyclic(2), FieldSpec.prime(3)).algebra
    )
    from smashkit.linalg import switch

    doc = {
        "format": 1,
        "A": a,
        "B": b,
        "R": serialize.matrix_to_json(switch(2, 2, QQ)),
    }
    f = tmp_path / "mixed.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(["smash", str(f)], capsys)
    assert code == 2


def test_classify_gf3_counts(tmp_path, capsys):
    c2 = tmp_path / "c2.json"
    run(["catalog", "group:cyclic:2", "--field", "prime:3", "-o", str(c2)], capsys)
    code, out, _ = run(
        ["classify", "--A", str(c2), "--B", str(c2), "--field", "prime:3", "--json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 8


def test_classify_emit_solutions(tmp_path, capsys):
    c2 = tmp_path / "c2.json"
    run(["catalog", "group:cyclic:2", "--field", "prime:2", "-o", str(c2)], capsys)
    outdir = tmp_path / "sols"
    code, _, _ = run(
        ["classify", "--A", str(c2), "--B", str(c2), "--emit-solutions", str(outdir)], capsys
    )
    assert code == 0
    files = sorted(outdir.iterdir())
    assert len(files) == 3
    # each emitted solution is itself valid smash data
    for fp in files:
        code, _, _ = run(["smash", str(fp)], capsys)
        assert code == 0


def test_smash_verb_on_quaternion(tmp_path, capsys):
    f = tmp_path / "quat.json"
    code, _, _ = run(["catalog", "quaternion:-1,-1", "-o", str(f)], capsys)
    assert code == 0
    code, out, _ = run(["smash", str(f), "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"]


def test_double_verb_kc2(tmp_path, capsys):
    f = tmp_path / "kc2.json"
    run(["catalog", "group:cyclic:2", "-o", str(f)], capsys)
    out_f = tmp_path / "double.json"
    code, _, _ = run(["double", str(f), "-o", str(out_f)], capsys)
    assert code == 0
    code, out, _ = run(["biproduct", str(out_f), "--dp"], capsys)
    assert code == 0


def test_factorize_verb(tmp_path, capsys):
    res = sweedler()
    wf = tmp_path / "witness.json"
    wf.write_text(serialize.dumps(serialize.witness_to_json(res.witness)))
    out_f = tmp_path / "bip.json"
    code, _, _ = run(["factorize", str(wf), "-o", str(out_f)], capsys)
    assert code == 0
    code, _, _ = run(["biproduct", str(out_f)], capsys)
    assert code == 0


def test_hopfmod_verb(tmp_path, capsys):
    from smashkit.hopfmod import r_switch, regular_module

    h = group_algebra(GroupTable.cyclic(2), QQ)
    t = regular_module(h, r_switch(h))
    f = tmp_path / "mod.json"
    f.write_text(serialize.dumps(serialize.hopfmod_to_json(t)))
    code, out, _ = run(["hopfmod", str(f)], capsys)
    assert code == 0


def test_taft_radford_catalog(tmp_path, capsys):
    f = tmp_path / "t.json"
    code, _, _ = run(["catalog", "taft:3:7", "-o", str(f)], capsys)
    assert code == 0
    code, _, _ = run(["check", str(f), "--as", "hopf"], capsys)
    assert code == 0
    code, _, _ = run(["catalog", "radford:3:3:3:1:7", "-o", str(f)], capsys)
    assert code == 0
    code, _, _ = run(["check", str(f), "--as", "bialgebra"], capsys)
    assert code == 0


def test_en_catalog_and_cosmash_check(tmp_path, capsys):
    f = tmp_path / "e2.json"
    code, _, _ = run(["catalog", "en:2", "-o", str(f)], capsys)
    assert code == 0
    code, _, _ = run(["check", str(f), "--as", "hopf"], capsys)
    assert code == 0


def test_unknown_catalog_name(capsys):
    code, _, err = run(["catalog", "nonsense:1"], capsys)
    assert code == 2
    assert "unknown" in err


def test_json_output_stable(tmp_path, capsys):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    run(["catalog", "en:2", "-o", str(f1)], capsys)
    run(["catalog", "en:2", "-o", str(f2)], capsys)
    assert f1.read_text() == f2.read_text()
