import json
from fractions import Fraction

import pytest

from weightenum import (
    EnumeratorPolynomial,
    FieldSpec,
    LinearCode,
    all_codes,
    census,
    cjwe,
    cwe,
    field_for_q,
    gfold_cjwe,
    macwilliams_transform,
    specialize,
)

F2 = FieldSpec(2, 1)
F3 = FieldSpec(3, 1)

REP2 = LinearCode(F2, 2, [(1, 1)])      # {00, 11}
SEL2 = LinearCode(F2, 2, [(0, 1)])      # {00, 01}
ZERO2 = LinearCode(F2, 2, [])
SPAN3 = LinearCode(F3, 2, [(1, 1)])


def test_cwe_examples():
    assert cwe(REP2).terms == {(2, 0): 1, (0, 2): 1}
    assert cwe(LinearCode(F2, 4, [])).terms == {(4, 0): 1}
    assert cwe(SPAN3).terms == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}


def test_cwe_matches_census():
    for code in all_codes(F3, 2):
        poly = cwe(code)
        cen = census([code])
        assert {e: int(c) for e, c in poly.terms.items()} == cen.counts


def test_cjwe_examples():
    assert cjwe(REP2, REP2).terms == {
        (2, 0, 0, 0): 1,
        (0, 2, 0, 0): 1,
        (0, 0, 2, 0): 1,
        (0, 0, 0, 2): 1,
    }
    assert cjwe(REP2, SEL2).terms == {
        (2, 0, 0, 0): 1,
        (1, 1, 0, 0): 1,
        (0, 0, 2, 0): 1,
        (0, 0, 1, 1): 1,
    }


def test_cjwe_against_zero_code_collapses_to_cwe():
    joint = cjwe(SPAN3, LinearCode(F3, 2, []))
    # only cells (alpha, 0) may appear; dropping the second index gives the cwe
    collapsed = specialize(joint, {(a, 0): (a,) for a in range(3)}, fold=1)
    assert collapsed == cwe(SPAN3)


def test_gfold_examples():
    assert gfold_cjwe([SPAN3]) == cwe(SPAN3)
    assert gfold_cjwe([REP2, SEL2]) == cjwe(REP2, SEL2)
    zero = LinearCode(F2, 3, [])
    triple = gfold_cjwe([zero, zero, zero])
    assert triple.terms == {(3, 0, 0, 0, 0, 0, 0, 0): 1}


def test_cjwe_coefficients_are_pair_counts():
    c2 = LinearCode(F3, 2, [(1, 2)])
    poly = cjwe(SPAN3, c2)
    cen = census([SPAN3, c2])
    assert {e: int(c) for e, c in poly.terms.items()} == cen.counts
    assert poly.evaluate_at_ones() == SPAN3.size * c2.size


def test_specialize_identity_and_constants():
    poly = cjwe(REP2, SEL2)
    assert specialize(poly, {}) == poly
    total = specialize(poly, {(a, b): 1 for a in range(2) for b in range(2)})
    assert total.terms == {(0, 0, 0, 0): Fraction(4)}
    collapsed = specialize(poly, {(a, b): (a,) for a in range(2) for b in range(2)}, fold=1)
    assert collapsed == cwe(REP2).scale(SEL2.size)


def test_specialize_rejects_inhomogeneous_results():
    poly = cjwe(REP2, SEL2)
    with pytest.raises(ValueError):
        specialize(poly, {(0, 0): 1, (0, 1): (0,)}, fold=1)
    with pytest.raises(ValueError):
        specialize(poly, {(0, 0): (0,), (0, 1): (0, 1)})


def test_serialization_round_trip_is_bit_exact():
    for poly in (cwe(SPAN3), cjwe(REP2, SEL2), cwe(LinearCode(F2, 3, []))):
        text = poly.to_text()
        again = EnumeratorPolynomial.from_text(text)
        assert again == poly
        assert again.to_text() == text


def test_serialized_document_shape():
    doc = json.loads(cwe(REP2).to_text())
    assert doc == {
        "fold": 1,
        "q": 2,
        "n": 2,
        "terms": [
            {"exp": [0, 2], "coef": "1/1"},
            {"exp": [2, 0], "coef": "1/1"},
        ],
    }


def test_pretty_rendering():
    text = cwe(REP2).pretty()
    assert "x[0]^2" in text and "x[1]^2" in text
    joint = cjwe(REP2, SEL2).pretty()
    assert "x[0,0]" in joint
    half = cwe(REP2).scale(Fraction(1, 2)).pretty()
    assert "1/2" in half


def test_polynomial_validation():
    with pytest.raises(ValueError):
        EnumeratorPolynomial(F2, 1, 2, {(1,): 1})
    with pytest.raises(ValueError):
        EnumeratorPolynomial(F2, 1, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        cwe(REP2) + cwe(LinearCode(F2, 3, []))


# -- character-sum transforms ---------------------------------------------------


def test_transform_frozen_examples():
    # self-dual first argument: the transform reproduces the enumerator
    base = cjwe(REP2, SEL2)
    out = macwilliams_transform(base, "first", (REP2.size, SEL2.size))
    assert out == base

    # zero against zero, both slots, sizes (1, 1): every character value is 1
    zz = cjwe(ZERO2, ZERO2)
    out = macwilliams_transform(zz, "both", (1, 1))
    full = LinearCode(F2, 2, [(1, 0), (0, 1)])
    assert out == cjwe(full, full)

    # fold-1 analogue: transform of the full-space enumerator is the zero-code one
    full1 = LinearCode(F2, 1, [(1,)])
    out = macwilliams_transform(cwe(full1), "first", (2,))
    assert out == cwe(LinearCode(F2, 1, []))


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_transform_matches_brute_force_duals(q, n):
    spec = field_for_q(q)
    codes = list(all_codes(spec, n))
    for c1 in codes:
        for c2 in codes:
            base = cjwe(c1, c2)
            sizes = (c1.size, c2.size)
            assert macwilliams_transform(base, "first", sizes) == cjwe(c1.dual(), c2)
            assert macwilliams_transform(base, "second", sizes) == cjwe(c1, c2.dual())
            assert macwilliams_transform(base, "both", sizes) == cjwe(c1.dual(), c2.dual())


def test_double_transform_returns_original():
    for c1, c2 in [(REP2, SEL2), (SPAN3, LinearCode(F3, 2, [(1, 2)]))]:
        base = cjwe(c1, c2)
        once = macwilliams_transform(base, "first", (c1.size, c2.size))
        twice = macwilliams_transform(once, "first", (c1.dual().size, c2.size))
        assert twice == base


def test_transform_preserves_homogeneity_and_mass():
    base = cjwe(SPAN3, SPAN3)
    out = macwilliams_transform(base, "both", (3, 3))
    assert all(sum(e) == base.n for e in out.terms)
    assert out == cjwe(SPAN3.dual(), SPAN3.dual())
    assert out.evaluate_at_ones() == SPAN3.dual().size ** 2


def test_capacity_limits():
    from weightenum import CapacityError

    full = LinearCode(F3, 2, [(1, 0), (0, 1)])
    with pytest.raises(CapacityError):
        cjwe(full, full, budget=10)
    with pytest.raises(CapacityError):
        macwilliams_transform(cjwe(REP2, SEL2), "both", (2, 2), budget=3)


def test_transform_argument_validation():
    base = cjwe(REP2, SEL2)
    with pytest.raises(ValueError):
        macwilliams_transform(base, "sideways", (2, 2))
    with pytest.raises(ValueError):
        macwilliams_transform(cwe(REP2), "second", (2, 2))
    with pytest.raises(ValueError):
        macwilliams_transform(base, "both", (2,))
    triple = gfold_cjwe([ZERO2, ZERO2, ZERO2])
    with pytest.raises(ValueError):
        macwilliams_transform(triple, "first", (1, 1))
