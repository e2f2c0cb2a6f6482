import math

import pytest

from weightenum import (
    CompositionProfile,
    FieldSpec,
    LinearCode,
    all_codes,
    bicomposition,
    census,
    composition,
    field_for_q,
    gcomposition,
    iter_compositions,
    prepend,
    project_tuple,
)

F2 = FieldSpec(2, 1)
F3 = FieldSpec(3, 1)
F4 = FieldSpec(2, 2)


def test_composition_examples():
    assert composition(F3, (0, 1, 1, 2)).counts == (1, 2, 1)
    assert composition(F3, (0, 0, 0)).counts == (3, 0, 0)
    assert composition(F4, (2, 3)).counts == (0, 0, 1, 1)  # (lam, lam+1)


def test_bicomposition_examples():
    assert bicomposition(F2, (0, 0), (0, 1)).counts == (1, 1, 0, 0)
    assert bicomposition(F2, (1, 1), (0, 1)).counts == (0, 0, 1, 1)
    u = (0, 1, 1, 0)
    prof = bicomposition(F2, u, u)
    assert prof.counts == (2, 0, 0, 2)  # diagonal cells carry the composition
    with pytest.raises(ValueError):
        bicomposition(F2, (0, 0), (0, 0, 0))


def test_gcomposition_examples():
    words = [(0, 0), (0, 1)]
    assert gcomposition(F2, words).counts == bicomposition(F2, *words).counts
    # g=3 over F_2: columns (0,0,1) and (0,1,1)
    prof = gcomposition(F2, [(0, 0), (0, 1), (1, 1)])
    assert prof.counts[0b001] == 1 and prof.counts[0b011] == 1
    assert sum(prof.counts) == 2
    zeros = gcomposition(F3, [(0, 0, 0)] * 3)
    assert zeros.counts[0] == 3 and sum(zeros.counts) == 3
    with pytest.raises(ValueError):
        gcomposition(F2, [])


def test_marginals_match_compositions():
    u, v = (0, 1, 2, 1), (2, 2, 0, 1)
    prof = bicomposition(F3, u, v)
    assert prof.marginal(0) == composition(F3, u)
    assert prof.marginal(1) == composition(F3, v)
    words = [(0, 1), (1, 1), (2, 0)]
    gp = gcomposition(F3, words)
    for j, w in enumerate(words):
        assert gp.marginal(j) == composition(F3, w)
    assert gp.drop_first().counts == bicomposition(F3, words[1], words[2]).counts


def test_tuple_calculus():
    assert project_tuple(("x", "y", "z"), 0) == ("y", "z")
    assert prepend("w", ("y", "z")) == ("w", "y", "z")
    assert project_tuple(prepend("w", ("y", "z")), 0) == ("y", "z")
    with pytest.raises(IndexError):
        project_tuple((1, 2), 2)


def test_profile_validation():
    with pytest.raises(ValueError):
        CompositionProfile(2, 1, (1, 2, 3))
    with pytest.raises(ValueError):
        CompositionProfile(2, 1, (1, -1))
    prof = CompositionProfile(2, 2, (1, 0, 0, 1))
    assert prof.n == 2
    with pytest.raises(IndexError):
        prof.marginal(2)


def test_census_examples():
    rep = LinearCode(F2, 2, [(1, 1)])
    cen = census([rep])
    assert cen.counts == {(2, 0): 1, (0, 2): 1}
    single = census([LinearCode(F3, 2, [])])
    assert single.counts == {(2, 0, 0): 1}
    span = census([LinearCode(F3, 2, [(1, 1)])])
    assert span.counts == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}


def test_census_totals_and_b_view():
    c1 = LinearCode(F3, 2, [(1, 1)])
    c2 = LinearCode(F3, 2, [(1, 2)])
    cen = census([c1, c2])
    assert cen.total() == c1.size * c2.size
    eta = bicomposition(F3, (1, 1), (1, 2))
    r, s = eta.marginal(0), eta.marginal(1)
    assert cen.b_count(r, s, eta) == cen.count(eta) > 0
    wrong_r = composition(F3, (0, 0))
    assert cen.b_count(wrong_r, s, eta) == 0
    with pytest.raises(ValueError):
        census([c1]).b_count(r, s, eta)


def test_census_consistency_with_code_pairs():
    for code in all_codes(F2, 3):
        cen = census([code])
        assert cen.total() == code.size
        for word in code.codeword_list():
            assert cen.count(composition(F2, word)) >= 1


@pytest.mark.parametrize("total,cells", [(0, 1), (3, 2), (2, 4), (4, 3)])
def test_iter_compositions(total, cells):
    seen = list(iter_compositions(total, cells))
    assert len(seen) == math.comb(total + cells - 1, cells - 1)
    assert all(sum(t) == total for t in seen)
    assert seen == sorted(seen)
    assert len(set(seen)) == len(seen)


def test_census_mismatched_codes():
    with pytest.raises(ValueError):
        census([LinearCode(F2, 2, []), LinearCode(F3, 2, [])])
    with pytest.raises(ValueError):
        census([])


def test_census_capacity():
    from weightenum import CapacityError

    full = LinearCode(F3, 2, [(1, 0), (0, 1)])
    with pytest.raises(CapacityError):
        census([full, full], budget=10)
