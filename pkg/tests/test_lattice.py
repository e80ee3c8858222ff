import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from windlab.lattice import hnf, hnf_modular, index_of, reduce_vector, smith_diagonal

entries = st.integers(-12, 12)


def matrices(max_rows=6, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=1, max_size=max_rows)
    )


def _is_hermite(basis, ncols):
    last = -1
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if c <= last or row[c] <= 0:
            return False
        last = c
    for k, row in enumerate(basis):
        c = next(i for i, x in enumerate(row) if x)
        if any(not 0 <= other[c] < row[c] for other in basis[:k]):
            return False
    return True


def _sympy_diag(rows):
    m = smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted(abs(m[i, i]) for i in range(min(m.shape)))


@settings(max_examples=150)
@given(matrices())
def test_smith_matches_sympy(rows):
    d = smith_diagonal(rows)
    assert sorted(d) == _sympy_diag(rows)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert d[len(nz):] == [0] * (len(d) - len(nz))


@given(matrices())
def test_hnf_shape(rows):
    ncols = len(rows[0])
    basis = hnf(rows, ncols)
    assert _is_hermite(basis, ncols)
    # same lattice: each side reduces to zero modulo the other
    for r in rows:
        assert not any(reduce_vector(basis, r))


@given(matrices(), st.randoms(use_true_random=False))
def test_hnf_order_independent(rows, rnd):
    ncols = len(rows[0])
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert hnf(rows, ncols) == hnf(shuffled, ncols)


@given(matrices())
def test_hnf_row_operation_invariant(rows):
    ncols = len(rows[0])
    if len(rows) < 2:
        return
    mixed = [list(r) for r in rows]
    mixed[0] = [a + 3 * b for a, b in zip(mixed[0], mixed[1])]
    assert hnf(rows, ncols) == hnf(mixed, ncols)


@given(matrices(), st.integers(2, 9))
def test_modular_hnf_agrees(rows, m):
    ncols = len(rows[0])
    full = rows + [[m * (i == j) for j in range(ncols)] for i in range(ncols)]
    assert hnf_modular(rows, [m] * ncols) == hnf(full, ncols)


def test_modular_hnf_mixed_moduli():
    rng = random.Random(3)
    for _ in range(50):
        mods = [rng.choice([2, 4, 8]) for _ in range(4)]
        rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
        full = rows + [[mods[i] * (i == j) for j in range(4)] for i in range(4)]
        assert hnf_modular(rows, mods) == hnf(full, 4)


def test_index():
    basis = hnf([[2, 0], [0, 3], [4, 6]], 2)
    assert basis == [[2, 0], [0, 3]]
    assert index_of(basis, 2) == 6
    assert index_of(hnf([[1, 1]], 2), 2) is None
    assert hnf([[0, 0]], 2) == []


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_reduce_vector_canonical(rows, v):
    ncols = len(rows[0])
    v = v[:ncols]
    basis = hnf(rows, ncols)
    r = reduce_vector(basis, v)
    assert reduce_vector(basis, r) == r
    shifted = [a + 2 * b - c for a, b, c in zip(v, rows[0], rows[-1])]
    assert reduce_vector(basis, shifted) == r


def test_smith_examples():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[0, 0]]) == [0]
    assert smith_diagonal([]) == []
    assert smith_diagonal([[4, 0], [0, 6]]) == [2, 12]
