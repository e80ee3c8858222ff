import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from windlab.coloring import (
    BLACK,
    WHITE,
    PGoodColoring,
    TwoColoring,
    coloring_from_half,
    embed_as_p_good,
    enumerate_good_colorings,
    matching_oracle,
    p_good_progression_sum,
    progression_balance,
    random_good_coloring,
    random_p_good_coloring,
    standard_coloring,
)

even_n = st.sampled_from([2, 4, 6, 8, 12, 16])


def test_standard_colorings():
    c = standard_coloring(1, 8)
    assert c.to_json_list() == list("WBBBBWWW")
    assert c.is_good()
    with pytest.raises(ValueError):
        standard_coloring(4, 8)
    with pytest.raises(ValueError):
        standard_coloring(0, 5)


def test_enumeration_counts():
    for n in (2, 4, 8, 10):
        cs = enumerate_good_colorings(n)
        assert len(cs) == 2 ** (n // 2)
        assert len(set(cs)) == len(cs)
        assert all(c.is_good() for c in cs)
    with pytest.raises(ValueError):
        enumerate_good_colorings(7)


def test_validation():
    bad = TwoColoring(4, (BLACK, BLACK, BLACK, WHITE))
    assert not bad.is_good()
    with pytest.raises(ValueError):
        bad.validate()
    assert not TwoColoring(3, (BLACK, WHITE, BLACK)).is_good()
    with pytest.raises(ValueError):
        TwoColoring(4, (BLACK,))


def test_json_round_trip():
    c = coloring_from_half([BLACK, WHITE, WHITE])
    assert TwoColoring.from_json_list(c.to_json_list()) == c


@given(even_n, st.integers(0, 10 ** 6), st.integers(0, 40), st.integers(1, 40))
def test_full_cosets_balance(n, seed, a, b):
    # a coset a + <b> is balanced whenever it contains n/2
    c = random_good_coloring(n, random.Random(seed))
    length = n // gcd(b, n)
    if length % 2 == 0:
        assert progression_balance(c, a, b, length) == 0


@given(even_n, st.integers(0, 10 ** 6), st.integers(0, 40))
def test_half_step_pairs_cancel(n, seed, a):
    c = random_good_coloring(n, random.Random(seed))
    assert progression_balance(c, a, n // 2, 2) == 0


@given(even_n, st.integers(0, 10 ** 6), st.integers(0, 40), st.integers(0, 40), st.integers(1, 30))
def test_embedding_preserves_sums(n, seed, a, b, length):
    c = random_good_coloring(n, random.Random(seed))
    e = embed_as_p_good(c)
    assert e.is_good()
    assert p_good_progression_sum(e, a, b, length) == progression_balance(c, a, b, length) % n


@given(st.sampled_from([(2, 8), (3, 9), (3, 12), (5, 10)]), st.integers(0, 10 ** 6))
def test_random_p_good(pn, seed):
    p, n = pn
    c = random_p_good_coloring(p, n, random.Random(seed))
    assert c.validate() is c
    step = n // p
    for a in range(n):
        assert p_good_progression_sum(c, a, step, p) == 0


def test_p_good_rejects():
    assert not PGoodColoring(3, 8, (0,) * 8).is_good()
    with pytest.raises(ValueError):
        PGoodColoring(2, 4, (1, 1, 1, 1)).validate()
    with pytest.raises(ValueError):
        progression_balance(standard_coloring(0, 4), 0, 1, 0)


@pytest.mark.parametrize("n,d,p", [(8, 1, 2), (8, 2, 2), (8, 4, 2), (12, 2, 3), (16, 2, 2), (9, 3, 3)])
def test_matching_oracle(n, d, p):
    parts = matching_oracle(n, d, p)
    assert len(parts) == n // p
    assert sorted(x for part in parts for x in part) == list(range(n))


def test_matching_oracle_missing():
    assert matching_oracle(8, 3) is None
    assert matching_oracle(8, 8) is None
    assert matching_oracle(8, 0) is None


@given(even_n, st.integers(0, 10 ** 6))
def test_matched_progressions_cancel(n, seed):
    c = random_good_coloring(n, random.Random(seed))
    parts = matching_oracle(n, n // 2)
    assert all(sum(c(x).weight for x in part) == 0 for part in parts)
