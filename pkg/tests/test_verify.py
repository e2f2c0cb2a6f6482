import json

import pytest

from weightenum import CLAIMS, run_claim


def test_claim_list():
    assert set(CLAIMS) == {
        "macwilliams",
        "thm33i",
        "thm33ii",
        "thm33iii",
        "yoshida",
        "thm43",
        "thm52",
        "lemma31",
        "lemma42",
    }


def test_macwilliams_exhaustive_cell():
    check = run_claim("macwilliams", q=2, n=2)
    assert check.assertive and check.passed
    assert check.unequal_count == 0
    assert check.equal_count == 25  # 5 codes of length 2, all pairs
    assert all("exhaustive" in inst["description"] for inst in check.instances)


def test_thm33_variants():
    for claim in ("thm33i", "thm33ii", "thm33iii"):
        check = run_claim(claim, q=3, n=1)
        assert check.assertive and check.passed and check.unequal_count == 0


def test_yoshida_claim():
    check = run_claim("yoshida", n=2)
    assert check.parameters["cells"] == [[2, 2]]
    assert check.assertive and check.passed
    with pytest.raises(ValueError):
        run_claim("yoshida", q=3, n=2)


def test_thm43_reports_discrepancies_without_failing():
    check = run_claim("thm43", q=3, n=2)
    assert not check.assertive
    assert check.passed  # report-only
    assert check.unequal_count > 0
    flagged = [inst for inst in check.instances if not inst["equal"]]
    assert all(inst["differences"] for inst in flagged)
    # instances embed replayable code files
    assert all("field p=3 m=1" in inst["codes"][0] for inst in check.instances)


def test_thm43_assertive_at_q2():
    check = run_claim("thm43", q=2, n=2)
    assert check.assertive and check.passed and check.unequal_count == 0


def test_thm52_small():
    check = run_claim("thm52", q=2, n=2, g=3)
    assert check.assertive and check.passed
    check3 = run_claim("thm52", q=3, n=1, g=3)
    assert not check3.assertive and check3.passed


def test_lemma31_reports_per_matrix_verdicts():
    check = run_claim("lemma31", q=2, n=3)
    assert not check.assertive and check.passed
    assert check.unequal_count == 24  # 3-cycles on codes not fixed by their square
    assert check.equal_count == 96 - 24
    assert all("matrix" in inst for inst in check.instances)


def test_lemma42_contains_the_witness():
    check = run_claim("lemma42", q=3, n=2)
    assert not check.assertive and check.passed
    witnesses = [
        inst
        for inst in check.instances
        if inst["r"] == [0, 2, 0] and inst["lhs"] == 2 and inst["rhs"] == 4
    ]
    assert witnesses and not witnesses[0]["equal"]
    assert "gen 1 1" in witnesses[0]["codes"][0]


def test_lemma42_assertive_at_q2():
    check = run_claim("lemma42", q=2, n=3)
    assert check.assertive and check.passed


def test_random_sweeps_are_deterministic():
    a = run_claim("thm43", q=4, n=2, trials=3, seed=11)
    b = run_claim("thm43", q=4, n=2, trials=3, seed=11)
    assert a.to_text() == b.to_text()
    c = run_claim("thm43", q=4, n=2, trials=3, seed=12)
    assert c.to_text() != a.to_text()


def test_report_serialization_shape():
    check = run_claim("lemma42", q=3, n=1)
    doc = json.loads(check.to_text())
    assert doc["claim"] == "lemma42"
    assert doc["aggregate"]["instances"] == len(doc["instances"])
    assert doc["aggregate"]["passed"] is True


def test_unknown_claim():
    with pytest.raises(ValueError):
        run_claim("lemma99", q=2, n=2)
