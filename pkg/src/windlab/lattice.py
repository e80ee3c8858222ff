"""Exact integer lattice reduction: Hermite and Smith normal forms.

Row convention throughout: a lattice is the integer span of the rows.  The
Hermite form is upper triangular with positive pivots, and every entry above
a pivot lies in ``[0, pivot)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .laurent import _xgcd as xgcd


def _hnf_insert(pivots: dict[int, list[int]], v: list[int], ncols: int) -> None:
    for col in range(ncols):
        b = v[col]
        if b == 0:
            continue
        row = pivots.get(col)
        if row is None:
            if b < 0:
                v = [-x for x in v]
            pivots[col] = v
            return
        a = row[col]
        if b % a == 0:
            q = b // a
            v = [x - q * y for x, y in zip(v, row)]
            continue
        g, s, t = xgcd(a, b)
        new = [s * y + t * x for x, y in zip(v, row)]
        ag, bg = a // g, b // g
        v = [ag * x - bg * y for x, y in zip(v, row)]
        pivots[col] = new


def _finish(pivots: dict[int, list[int]]) -> list[list[int]]:
    cols = sorted(pivots)
    rows = [pivots[c] for c in cols]
    for k, c in enumerate(cols):
        d = rows[k][c]
        for i in range(k):
            q = rows[i][c] // d
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]
    return rows


def hnf(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Hermite normal form of the lattice spanned by ``rows`` (exact, any rank)."""
    pivots: dict[int, list[int]] = {}
    for r in rows:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a lattice of dimension {ncols}")
        _hnf_insert(pivots, [int(x) for x in r], ncols)
    return _finish(pivots)


def hnf_modular(rows: Iterable[Sequence[int]], moduli: Sequence[int]) -> list[list[int]]:
    """Hermite normal form of span(rows) + span(m_j e_j), full rank by construction.

    Because every m_j e_j lies in the lattice, entries right of the pivot can
    be reduced mod m_j at all times, so the arithmetic stays in machine
    integers.  The result is the same canonical form :func:`hnf` returns for
    the same lattice.
    """
    m = np.array([int(x) for x in moduli], dtype=np.int64)
    N = len(m)
    if N and (m <= 0).any():
        raise ValueError("moduli must be positive")
    if N and int(m.max()) ** 2 >= 2 ** 62:
        raise ValueError("moduli too large for the machine-integer path")
    B = np.diag(m).astype(np.int64)
    for r in rows:
        v = np.array([int(x) for x in r], dtype=np.int64) % m
        k = 0
        while k < N:
            nz = np.flatnonzero(v[k:])
            if not len(nz):
                break
            k += int(nz[0])
            a, b = int(B[k, k]), int(v[k])
            if b % a == 0:
                v[k:] -= (b // a) * B[k, k:]
            else:
                g, s, t = xgcd(a, b)
                new = s * B[k, k:] + t * v[k:]
                v[k:] = (a // g) * v[k:] - (b // g) * B[k, k:]
                new[1:] %= m[k + 1:]
                B[k, k:] = new
            v[k + 1:] %= m[k + 1:]
            v[k] = 0
            k += 1
    # reduce above the pivots, column by column
    for k in range(N):
        d = B[k, k]
        for i in range(k):
            q = B[i, k] // d
            if q:
                B[i, k:] -= q * B[k, k:]
                B[i, k + 1:] %= m[k + 1:]
    return B.tolist()


def index_of(basis: list[list[int]], ncols: int) -> int | None:
    """|Z^ncols / L| for a Hermite basis, or None when L has lower rank."""
    if len(basis) < ncols:
        return None
    out = 1
    for k, row in enumerate(basis):
        out *= row[k]
    return out


def reduce_vector(basis: list[list[int]], v: Sequence[int]) -> list[int]:
    """Canonical representative of v modulo the lattice of a Hermite basis."""
    out = [int(x) for x in v]
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        q = out[c] // row[c]
        if q:
            out = [x - q * y for x, y in zip(out, row)]
    return out


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Smith normal form diagonal d_1 | d_2 | ... (zeros last), min(rows, cols) entries."""
    A = [[int(x) for x in r] for r in rows]
    if not A:
        return []
    nr, nc = len(A), len(A[0])
    diag = []
    for t in range(min(nr, nc)):
        # pivot: least nonzero absolute value in the trailing block
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = A[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                diag.extend([0] * (min(nr, nc) - t))
                return _divisibility_fix(diag)
            _, i, j = best
            A[t], A[i] = A[i], A[t]
            for r in A:
                r[t], r[j] = r[j], r[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, nr):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, nc):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return _divisibility_fix(diag)


def _divisibility_fix(diag: list[int]) -> list[int]:
    from math import gcd

    d = list(diag)
    # the pivoting above already yields a divisor chain; this guards degenerate zero orders
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            g = gcd(a, b)
            l = a // g * b if g else 0
            d[i], d[j] = g, l
    return d
