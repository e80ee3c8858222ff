import random

import pytest
from hypothesis import given

from conftest import words
from windlab.symmetry import Symmetry
from windlab.word import (
    EMPTY,
    X,
    Y,
    Generator,
    Word,
    WordSyntaxError,
    apply_symmetry,
    basic_commutator,
    commutator,
    concat,
    conjugate,
    engel_word,
    exponent_sum,
    exponent_sums,
    format_word,
    free_reduce,
    invert,
    morse_identity,
    morse_words,
    named_power_relators,
    named_relator_family,
    parse_word,
    power,
    random_nth_power_product,
    relator_family,
)


def w(text):
    return parse_word(text)


def test_parse_commutator():
    assert w("[x,y]") == w("x y x^-1 y^-1")
    assert w("[x,y]").letters == (1, 2, -1, -2)


def test_parse_cancellation_and_powers():
    assert w("x^-1 x") == EMPTY
    assert w("(xy)^2").letters == (1, 2, 1, 2)
    assert w("1") == EMPTY
    assert w(" ( x y ) ^ - 2 ") == invert(w("xyxy"))


@pytest.mark.parametrize("text,pos", [("x^", 2), ("(x", 2), ("[x y]", 4), ("z", 0), ("x)", 1)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text)
    assert err.value.position == pos


def test_parse_overflow():
    with pytest.raises(OverflowError):
        parse_word("x^" + "9" * 40)


@given(words)
def test_print_parse_round_trip(u):
    assert parse_word(format_word(u)) == u
    assert parse_word(format_word(u, fold=True)) == u


def test_format():
    assert format_word(EMPTY) == "1"
    assert format_word(w("x x y^-1")) == "xxy^-1"
    assert format_word(w("x x y^-1"), fold=True) == "x^2y^-1"


def test_free_reduce_examples():
    assert free_reduce([1, 2, -2, 1]).letters == (1, 1)
    assert free_reduce([]) == EMPTY
    assert free_reduce([1, 2, -1, 1, -2]).letters == (1,)


@given(words)
def test_free_reduce_idempotent(u):
    assert free_reduce(u.letters) == u
    assert all(a != -b for a, b in zip(u.letters, u.letters[1:]))


@given(words, words)
def test_group_laws(a, b):
    assert concat(a, invert(a)) == EMPTY
    assert power(a, 0) == EMPTY
    assert conjugate(EMPTY, a) == a
    assert invert(concat(a, b)) == concat(invert(b), invert(a))
    assert a * b == concat(a, b)
    assert ~a == invert(a)


@given(words, words)
def test_exponent_sum_homomorphism(a, b):
    for g in Generator:
        assert exponent_sum(a * b, g) == exponent_sum(a, g) + exponent_sum(b, g)


@given(words)
def test_power_matches_repeated_concatenation(a):
    for k in range(-3, 4):
        expected = EMPTY
        for _ in range(abs(k)):
            expected = expected * (a if k > 0 else ~a)
        assert power(a, k) == expected


def test_operation_examples():
    assert invert(w("xy")) == w("y^-1 x^-1")
    assert power(w("[x,y]"), 2).letters == (1, 2, -1, -2) * 2
    assert conjugate(X, w("[x,y]")) == w("x [x,y] x^-1")
    assert exponent_sum(w("[x,y]"), Generator.X_GEN) == 0
    assert exponent_sum(w("x^2 y^-1"), Generator.X_GEN) == 2


def test_engel_words():
    assert engel_word(1) == w("y x y^-1 x^-1")
    assert engel_word(3) == commutator(Y, engel_word(2))
    with pytest.raises(ValueError):
        engel_word(0)
    for m in range(1, 19):
        assert exponent_sums(engel_word(m)) == (0, 0)
    assert len(engel_word(18)) == 524322


def test_basic_commutators():
    for m in range(1, 7):
        assert basic_commutator(0, m) == engel_word(m)
    assert basic_commutator(2, 1) == commutator(X, commutator(X, engel_word(1)))
    for i in range(4):
        for j in range(1, 5):
            assert basic_commutator(i, j).in_derived_subgroup()


def test_morse_words():
    assert morse_words(1) == (X, Y)
    assert morse_words(2) == (w("xy"), w("yx"))
    for m in range(2, 9):
        u, v = morse_words(m)
        assert len(u) == len(v) == 2 ** (m - 1)
        assert exponent_sums(u) == exponent_sums(v) == (2 ** (m - 2), 2 ** (m - 2))
        assert all(c > 0 for c in u.letters + v.letters)
        assert morse_identity(m).in_derived_subgroup()
    assert exponent_sum(morse_words(4)[0], Generator.X_GEN) == 4


def test_symmetries():
    assert apply_symmetry(w("xy"), Symmetry.SWAP_XY) == w("yx")
    assert apply_symmetry(X, Symmetry.INV_X) == ~X
    rng = random.Random(5)
    for _ in range(20):
        u = Word(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 30)))
        for s in Symmetry:
            assert apply_symmetry(apply_symmetry(u, s), s) == u


def test_relator_family_shape():
    for n in (2, 4, 8):
        fam = relator_family(n)
        assert all(r.in_derived_subgroup() for r in fam)
        assert len(set(fam)) == len(fam)
        names = [k for k, _ in named_relator_family(n)]
        assert {"w", "u", "v", "t", "t2"} <= set(names)
    named = dict(named_relator_family(4))
    assert named["w"] == power(w("[x,y]"), 4)
    assert named["t"] == w("x^4 (x^-1 y)^4 y^-4")
    assert named["t2"] == w("x^8 (x^-2 y)^4 y^-4")


def test_power_relators():
    rel = named_power_relators(4)
    assert len(rel) == 2 * 16
    assert all(r.in_derived_subgroup() for _, r in rel)


def test_random_nth_power_product():
    for seed in range(30):
        z = random_nth_power_product(4, 3, 6, seed)
        assert exponent_sums(z) == (0, 0)
        assert z == random_nth_power_product(4, 3, 6, seed)
    assert random_nth_power_product(4, 1, 0, 0) == EMPTY
    with pytest.raises(ValueError):
        random_nth_power_product(4, 0, 3, 0)
