import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windlab.subgroup import (
    BFS_LIMIT,
    ResidueVectorSet,
    cotainf_image_check,
    cotainf_image_order,
    elementary_divisors,
    factor_power,
    omega_bar_image_generators,
    omega_bar_image_order,
    omega_image_generators,
    omega_image_order,
    omega_tilde_image_order,
    orbit_sizes,
    restricted_burnside_bound,
    shifted_representatives,
    subgroup_order,
    subgroup_order_bfs,
)


@st.composite
def residue_sets(draw):
    n = draw(st.sampled_from([2, 3, 4, 6, 8]))
    r = draw(st.integers(1, 4))
    k = draw(st.integers(0, 5))
    gens = draw(st.lists(st.lists(st.integers(-20, 20), min_size=r, max_size=r), min_size=k, max_size=k))
    return ResidueVectorSet(n, r, tuple(map(tuple, gens)))


@settings(max_examples=150)
@given(residue_sets())
def test_snf_matches_bfs(gens):
    order = subgroup_order(gens)
    assert order == subgroup_order_bfs(gens)
    divs = elementary_divisors(gens)
    prod = 1
    for d in divs:
        prod *= d
    assert prod == order


@given(residue_sets())
def test_row_operations_preserve_order(gens):
    if len(gens.generators) < 2:
        return
    g = [list(v) for v in gens.generators]
    g[0] = [a - 5 * b for a, b in zip(g[0], g[1])]
    g.append([a + b for a, b in zip(g[0], g[1])])
    assert subgroup_order(ResidueVectorSet(gens.n, gens.r, tuple(map(tuple, g)))) == subgroup_order(gens)


def test_mixed_moduli():
    s = ResidueVectorSet(4, 2, ((1, 1),), (2, 4))
    assert s.generators == ((1, 1),)
    assert subgroup_order(s) == 4 == subgroup_order_bfs(s)
    assert ResidueVectorSet(4, 2, ((5, -1),)).generators == ((1, 3),)
    with pytest.raises(ValueError):
        ResidueVectorSet(4, 2, ((1,),))
    with pytest.raises(ValueError):
        ResidueVectorSet(4, 2, (), (2,))


def test_empty_and_full():
    assert subgroup_order(ResidueVectorSet(5, 3)) == 1
    assert elementary_divisors(ResidueVectorSet(5, 3)) == []
    full = ResidueVectorSet(4, 2, ((1, 0), (0, 1)))
    assert subgroup_order(full) == 16
    assert elementary_divisors(full) == [4, 4]


def test_bfs_guard():
    big = ResidueVectorSet(8, 8, ((1,) * 8,))
    assert big.ambient_order > BFS_LIMIT
    with pytest.raises(ValueError):
        subgroup_order_bfs(big)


def test_factor_power():
    assert factor_power(1) == "1"
    assert factor_power(2 ** 17) == "2^17"
    assert factor_power(72) == "2^3*3^2"
    assert factor_power(7) == "7^1"


def test_small_images_by_closure():
    for gens in (omega_image_generators(4), omega_bar_image_generators(4)):
        assert subgroup_order(gens) == subgroup_order_bfs(gens)
    assert omega_tilde_image_order() == 2 ** 6


@pytest.mark.parametrize("n", [4, 8, 16])
def test_image_order_closed_forms(n):
    assert omega_image_order(n) == 2 * (n // 2) ** n
    assert omega_bar_image_order(n) == (n // 2) ** (n + 1)


def test_cotainf_images():
    assert cotainf_image_check(8) == 2 ** 5
    assert cotainf_image_check(16) >= 2 ** 16
    assert cotainf_image_order(8, shifted_representatives(8, 3)) == 2 ** 5
    assert sum(orbit_sizes(16)) == 256
    with pytest.raises(ValueError):
        cotainf_image_order(32)


def test_restricted_burnside_bound_as_computed():
    b = restricted_burnside_bound(strict=False)
    assert b.listed_tuples_match
    assert b.schreier_rank == 4097
    assert b.base_exponent == 4109
    assert b.subgroup_order == 2 ** 5
    assert b.total_exponent == 4114
    assert b.total == 2 ** 4114
    with pytest.raises(AssertionError):
        restricted_burnside_bound(strict=True)
