import json
import random
import subprocess
import sys

import pytest

from qgrank.cli import main
from qgrank.records import OutputRecord, from_csv, from_json, parse_text, to_csv, to_json
from qgrank.root_systems import all_types
from qgrank.table2 import default_fixture_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rank_text(capsys):
    code, out, err = run(capsys, "rank", "--type", "G2", "--ell", "14")
    assert code == 0
    assert "rank = 10" in out.splitlines()
    assert err.startswith("# rank of C(G2")
    _, _, err = run(capsys, "rank", "--type", "g2", "--ell", "14", "--quiet")
    assert err == ""


def test_rank_a1(capsys):
    code, out, _ = run(capsys, "rank", "--type", "A1", "--ell", "2")
    assert code == 0 and "rank = 1" in out.splitlines()


def test_rank_degenerate(capsys):
    code, out, err = run(capsys, "rank", "--type", "G2", "--ell", "9")
    assert code == 2
    assert out == ""
    assert "ell0 = 12" in err and len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["rank", "--type", "G2"],
        ["rank", "--type", "G2", "--ell", "x"],
        ["rank", "--type", "G2", "--ell", "0"],
        ["rank", "--type", "G2", "--ell", "14", "--method", "magic"],
        ["bogus"],
        [],
        ["table", "--ell-max", "4"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


@pytest.mark.parametrize("label", ["X3", "B1", "D3", "E9"])
def test_invalid_type_is_domain_error(capsys, label):
    code, _, err = run(capsys, "rank", "--type", label, "--ell", "10")
    assert code == 2 and err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--type", "G2", "--parity", "indivisible", "--terms", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "F(x) = 1/[(1 - x)(1 - x^2)(1 - x^3)]"
    assert lines[1] == "1 1 2 3 4 5 7 8 10"
    _, out, _ = run(capsys, "series", "--type", "A1", "--terms", "3")
    assert out.splitlines()[-1] == "1 2 3 4"
    _, out, _ = run(capsys, "series", "--type", "E8", "--terms", "0")
    assert out.splitlines()[-1] == "1"
    _, out, _ = run(capsys, "series", "--type", "G2", "--parity", "divisible", "--terms", "15", "--format", "json")
    data = json.loads(out)
    assert data["factors"] == [1, 3, 6] and data["coefficients"][15] == 12


def test_series_bad_parity(capsys):
    code, _, err = run(capsys, "series", "--type", "A3", "--parity", "indivisible")
    assert code == 2 and "m = 1" in err


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--type", "A1", "--ell", "4")
    assert code == 0 and out.splitlines() == ["0", "1", "2", "count = 3"]
    _, out, _ = run(capsys, "weights", "--type", "G2", "--ell", "14")
    lines = out.splitlines()
    assert len(lines) == 11 and lines[-1] == "count = 10"
    _, out, _ = run(capsys, "weights", "--type", "B2", "--ell", "5")
    assert out.splitlines() == ["0,0", "1,0", "count = 2"]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--type", "G2", "--ell-min", "7", "--ell-max", "14", "--format", "csv")
    assert code == 0
    records = from_csv(out)
    assert len(records) == 8
    assert [r.ell for r in records if r.degenerate] == [9]
    assert records[2].rank is None
    assert records[-1].rank == 10


def test_table_a1_and_empty(capsys):
    _, out, _ = run(capsys, "table", "--type", "A1", "--ell-min", "2", "--ell-max", "4")
    assert [r.rank for r in from_csv(out)] == [1, 2, 3]
    code, out, _ = run(capsys, "table", "--type", "A1", "--ell-min", "5", "--ell-max", "4")
    assert code == 0 and out.splitlines() == [out.splitlines()[0]] and out.startswith("type,ell")
    _, out, _ = run(capsys, "table", "--type", "A1", "--ell-min", "5", "--ell-max", "4", "--format", "json")
    assert json.loads(out) == []


def test_table_all_types(capsys):
    _, out, _ = run(capsys, "table", "--all-types", "--max-rank", "2", "--ell-max", "10", "--format", "json")
    records = from_json(out)
    assert {r.type for r in records} == {"A1", "A2", "B2", "C2", "G2"}
    assert len(records) == 50


def test_record_roundtrip():
    rec = OutputRecord("G2", 14, 1, 7, (2, 3), 8, 10, "both", None)
    deg = OutputRecord("G2", 9, 0, 12, (3, 6), None, None, "gf", None, True)
    assert from_json(to_json([rec, deg])) == [rec, deg]
    assert from_csv(to_csv([rec, deg])) == [rec, deg]
    assert parse_text("\n".join(rec.text_lines())) == rec
    assert list(json.loads(to_json([rec]))[0]) == [
        "type", "ell", "ell_m", "ell0", "parts", "s", "rank", "method", "subcategory_rank", "degenerate",
    ]


def test_formats_agree_on_random_queries(capsys):
    rng = random.Random(20051026)
    types = all_types(8)
    done = 0
    while done < 20:
        t = rng.choice(types)
        ell = rng.randint(2, 80)
        method = rng.choice(["gf", "enum", "both"])
        base = ["rank", "--type", t.label, "--ell", str(ell), "--method", method, "--quiet"]
        code, text, _ = run(capsys, *base)
        if code == 2:
            continue
        _, js, _ = run(capsys, *base, "--format", "json")
        _, cs, _ = run(capsys, *base, "--format", "csv")
        a = parse_text(text)
        b = OutputRecord.from_dict(json.loads(js))
        (c,) = from_csv(cs)
        assert a == b == c
        done += 1


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "erratum" in out and "15" in out
    assert out.splitlines()[-1] == "verification passed"


def test_verify_corrupted_fixture(capsys, tmp_path):
    text = default_fixture_text().replace("E 8 0 2,2,3,3,4,4,5,6 30", "E 8 0 2,2,3,3,4,4,5,7 30")
    path = tmp_path / "table2.txt"
    path.write_text(text)
    code, out, _ = run(capsys, "verify", "--fixture", str(path), "--max-ell", "20")
    assert code == 3
    fails = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert len(fails) == 1 and "E8 ell_m=0" in fails[0]


def test_verify_missing_row(capsys, tmp_path):
    text = "\n".join(l for l in default_fixture_text().splitlines() if not l.startswith("G 2 1"))
    path = tmp_path / "table2.txt"
    path.write_text(text)
    code, out, _ = run(capsys, "verify", "--fixture", str(path), "--max-ell", "20")
    assert code == 3 and "G2 ell_m=1: missing" in out


def test_verify_broken_method(capsys):
    code, out, _ = run(capsys, "verify", "--inject-fault", "enumeration", "--max-ell", "30")
    assert code == 3
    assert any(l.startswith("FAIL  sweep") for l in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgrank", "rank", "--type", "G2", "--ell", "14", "--quiet"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "rank = 10" in proc.stdout
