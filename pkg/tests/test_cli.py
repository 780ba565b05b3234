import json

import pytest

from ribbonvol.cli import main
from ribbonvol.exactmath import EvenLaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_count_single(capsys):
    code, out = run(capsys, "count", "--gn", "1,1", "--p", "6")
    assert code == 0
    assert out == "2/3\n"


def test_count_single_json(capsys):
    code, out = run(capsys, "count", "--gn", "0,3", "--p", "2,3,5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"g": 0, "n": 3, "p": [2, 3, 5], "value": "1/1"}


def test_count_census_csv(capsys):
    code, out = run(capsys, "count", "--gn", "1,1", "--max-sum", "8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "g,n,p_1,numerator,denominator"
    assert "1,1,6,2,3" in lines


def test_count_census_json_and_cache(capsys, tmp_path):
    code, out = run(
        capsys,
        "count", "--gn", "0,3", "--max-sum", "6",
        "--format", "json", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == "ribbonvol-census"
    assert list(tmp_path.glob("census-*.json"))
    # second run must be byte-identical (and served from the cache)
    code2, out2 = run(
        capsys,
        "count", "--gn", "0,3", "--max-sum", "6",
        "--format", "json", "--cache-dir", str(tmp_path),
    )
    assert (code2, out2) == (code, out)


def test_count_census_text_deterministic(capsys):
    _, first = run(capsys, "count", "--gn", "0,4", "--max-sum", "7")
    _, second = run(capsys, "count", "--gn", "0,4", "--max-sum", "7")
    assert first == second
    assert "1 1 1 3\t2/1" in first


def test_count_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["count", "--gn", "1,1"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["count", "--gn", "1,1", "--p", "4", "--max-sum", "6"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["count", "--gn", "0,2", "--p", "1,1"])
    assert err.value.code == 2
    capsys.readouterr()


def test_poly_text(capsys):
    code, out = run(capsys, "poly", "VS", "1", "1")
    assert code == 0
    assert out == "(-1/32) t1^2\n"


def test_poly_json_round_trip(capsys):
    code, out = run(capsys, "poly", "L", "1", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["kind"], doc["g"], doc["n"]) == ("L", 1, 2)
    poly = EvenLaurentPoly.from_json_dict(doc)
    from ribbonvol.transform import LAPLACE, compute

    assert poly == compute(LAPLACE, 1, 2)


def test_poly_latex(capsys):
    code, out = run(capsys, "poly", "VE", "1", "1", "--format", "latex")
    assert code == 0
    assert out == "- \\frac{1}{128}t_{1}^{2}\n"


def test_poly_rejects_unstable(capsys):
    with pytest.raises(SystemExit) as err:
        main(["poly", "L", "0", "2"])
    assert err.value.code == 2
    capsys.readouterr()


def test_verify_golden(capsys):
    code, out = run(capsys, "verify", "--suite", "golden")
    assert code == 0
    assert out.count("ok  ") == 6
    assert "FAIL" not in out


def test_verify_jsonl(capsys):
    code, out = run(capsys, "verify", "--suite", "symplectic", "--format", "jsonl")
    assert code == 0
    docs = [json.loads(line) for line in out.strip().splitlines()]
    assert len(docs) == 2
    assert all(doc["ok"] for doc in docs)


def test_verify_fast_suites(capsys):
    code, out = run(capsys, "verify", "--suite", "ratio", "--level", "3")
    assert code == 0
    code, out = run(capsys, "verify", "--suite", "leading", "--level", "3")
    assert code == 0
    code, out = run(capsys, "verify", "--suite", "series", "--level", "8")
    assert code == 0
    code, out = run(capsys, "verify", "--suite", "eo", "--trials", "1")
    assert code == 0


def test_verify_output_is_deterministic(capsys):
    _, first = run(capsys, "verify", "--suite", "eo", "--trials", "2", "--seed", "9")
    _, second = run(capsys, "verify", "--suite", "eo", "--trials", "2", "--seed", "9")
    assert first == second


def test_intersect(capsys):
    code, out = run(capsys, "intersect", "2", "1")
    assert code == 0
    assert "<tau_4> literal=1/144 classical=1/1152 ratio=8" in out
    assert "common literal/classical ratio: 8" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0
    out = capsys.readouterr().out
    assert out.startswith("ribbonvol ")
