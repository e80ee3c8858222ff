import random
from math import comb, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import derived_words, polys
from windlab.coloring import enumerate_good_colorings, random_good_coloring, standard_coloring
from windlab.invariant import (
    InvariantSpec,
    area,
    area_bar,
    basiccom_report,
    cotainf_colorings,
    cotainf_family,
    diagonal_spec,
    engel_gamma_report,
    engel_h0_closed_form,
    gamma_orbits,
    horizontal_spec,
    lambda_of_word,
    lambda_value,
    m24_is_trivial,
    morse_report,
    n2n_is_trivial,
    omega,
    omega_bar,
    omega_of_poly,
    omega_tilde,
    vertical_spec,
    vertical_via_swap,
)
from windlab.laurent import LaurentPoly, translate
from windlab.winding import NotInDerivedSubgroup, winding_invariant
from windlab.word import named_power_relators, parse_word, power, random_nth_power_product

_RELATORS = {n: [winding_invariant(w) for _, w in named_power_relators(n)] for n in (4, 8)}


def _random_spec(n, rng):
    while True:
        px, py = rng.randrange(n), rng.randrange(n)
        if gcd(gcd(px, py), n) == 1:
            break
    shift = (rng.randrange(n), rng.randrange(n))
    return InvariantSpec(n, px, py, shift, random_good_coloring(n, rng))


@pytest.mark.parametrize("n", [4, 8])
def test_invariants_vanish_on_power_relators(n):
    rng = random.Random(n)
    for _ in range(25):
        spec = _random_spec(n, rng)
        assert all(lambda_value(spec, p) == 0 for p in _RELATORS[n])


def test_non_surjective_phi_is_not_an_invariant():
    spec = InvariantSpec(4, 2, 0, (0, 0), standard_coloring(0, 4))
    assert any(lambda_value(spec, p) for p in _RELATORS[4])


@given(polys, st.integers(0, 10 ** 6))
def test_translate_convention(p, seed):
    rng = random.Random(seed)
    spec = _random_spec(8, rng)
    at_origin = InvariantSpec(8, spec.phi_x, spec.phi_y, (0, 0), spec.coloring)
    i0, j0 = spec.translate
    assert lambda_value(spec, p) == lambda_value(at_origin, translate(p, (-i0, -j0)))


@given(polys, polys)
def test_lambda_is_additive(p, q):
    spec = diagonal_spec(8)
    assert lambda_value(spec, p + q) == (lambda_value(spec, p) + lambda_value(spec, q)) % 8


def test_unit_square_values():
    sq = parse_word("[x,y]")
    assert lambda_of_word(horizontal_spec(0, 4), sq) == 1
    assert lambda_of_word(horizontal_spec(1, 4), sq) == 3
    assert omega(sq, 4).as_tuple() == (1, 3, 1, 3)
    assert omega_tilde(sq) == (1, 3, 1, 3, 1)
    assert area(sq) == 1 and area_bar(power(sq, 3), 4) == 1


def test_spec_validation():
    with pytest.raises(ValueError):
        InvariantSpec(4, 1, 0, (0, 0), None)
    with pytest.raises(ValueError):
        InvariantSpec(4, 1, 0, (0, 0), standard_coloring(0, 8))
    assert InvariantSpec(4, 5, -1, (0, 0), standard_coloring(0, 4)).phi_y == 3
    with pytest.raises(ValueError):
        omega(parse_word("[x,y]"), 6)
    with pytest.raises(NotInDerivedSubgroup):
        lambda_of_word(diagonal_spec(4), parse_word("x"))


@given(polys)
def test_vertical_by_swap(p):
    for i in range(4):
        assert vertical_via_swap(p, i, 8) == lambda_value(vertical_spec(i, 8), p)


@settings(max_examples=50)
@given(derived_words())
def test_omega_bar_components(z):
    a, vec = omega_bar(z, 8)
    assert a == area(z) % 4
    assert vec == omega(z, 8)


def test_omega_of_poly_zero():
    assert omega_of_poly(LaurentPoly(), 8).is_zero()


def test_m24_word_problem():
    assert m24_is_trivial(parse_word("1"))
    assert m24_is_trivial(parse_word("x^4"))
    assert m24_is_trivial(parse_word("(xy)^4"))
    assert not m24_is_trivial(parse_word("x"))
    assert not m24_is_trivial(parse_word("[x,y]"))
    assert not m24_is_trivial(parse_word("[x,y]^2"))
    for seed in range(30):
        assert m24_is_trivial(random_nth_power_product(4, 3, 5, seed))


def test_n2n_word_problem():
    for n in (2, 3, 4, 6):
        assert n2n_is_trivial(parse_word(f"(x y)^{n}"), n)
        assert n2n_is_trivial(power(parse_word("[x,y]"), n), n)
        assert not n2n_is_trivial(parse_word("x"), n)
    # the commutator has order n/2 for even n
    assert n2n_is_trivial(power(parse_word("[x,y]"), 2), 4)
    assert not n2n_is_trivial(parse_word("[x,y]"), 4)
    with pytest.raises(ValueError):
        n2n_is_trivial(parse_word("x"), 0)


def test_gamma_orbits_partition():
    for n in (8, 16):
        orbits = gamma_orbits(n)
        pts = [p for o in orbits for p in o]
        assert len(pts) == len(set(pts)) == n * n
        assert all(len(o) == 16 for o in orbits)


def test_cotainf_family_size():
    c0, c1 = cotainf_colorings(8)
    assert c0 == standard_coloring(0, 8) and c1.is_good() and c1 != c0
    fam = cotainf_family(8)
    assert len(fam) == 1 * 2 * len(gamma_orbits(8))


def test_engel_gamma():
    assert engel_gamma_report(4).first_vanishing == 4
    r = engel_gamma_report(8)
    assert r.trivial_on_gamma == r.first_vanishing + 1


def test_morse():
    for k in (2, 3):
        r = morse_report(k)
        assert r.divisible
        assert r.h0_minus_h1 != 0
    with pytest.raises(ValueError):
        morse_report(1)


def test_binomial_closed_form():
    for k in range(2, 10):
        assert comb(2 ** k, 2 ** (k - 1)) % 8 == 6
    assert engel_h0_closed_form(8) == (70 - 2) % 8


def test_basic_commutator_report():
    r = basiccom_report(8)
    assert r.all_match and r.none_divisible_by_8
    assert set(r.values) == set(range(9))


def test_all_good_colorings_respect_relators():
    rel = _RELATORS[4]
    for c in enumerate_good_colorings(4):
        for px, py in [(1, 0), (0, 1), (1, 1), (1, 3), (2, 1)]:
            spec = InvariantSpec(4, px, py, (0, 0), c)
            assert all(lambda_value(spec, p) == 0 for p in rel)
