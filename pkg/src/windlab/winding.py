"""The winding invariant W: F2' -> Z[X^+-1, Y^+-1].

A word draws a lattice curve from the origin (x steps horizontally, y
vertically).  For a word in the derived subgroup the curve is closed and the
coefficient of X^i Y^j is its winding number around (i + 1/2, j + 1/2).
"""

from __future__ import annotations

import numpy as np

from .laurent import LaurentPoly, translate
from .word import (
    EMPTY,
    Word,
    commutator,
    concat_all,
    conjugate,
    exponent_sums,
    power,
    xy_power,
)
from .word import X as WX
from .word import Y as WY

LatticePath = list[tuple[int, int]]


class NotInDerivedSubgroup(ValueError):
    """Raised when a word with a nonzero exponent sum reaches a winding computation."""


def _steps(w: Word) -> tuple[np.ndarray, np.ndarray]:
    codes = np.fromiter(w.letters, dtype=np.int8, count=len(w.letters))
    dx = (codes == 1).astype(np.int64) - (codes == -1)
    dy = (codes == 2).astype(np.int64) - (codes == -2)
    return dx, dy


def curve_points(w: Word) -> LatticePath:
    """Vertices of the lattice curve of w, starting at the origin."""
    dx, dy = _steps(w)
    xs = np.concatenate(([0], np.cumsum(dx)))
    ys = np.concatenate(([0], np.cumsum(dy)))
    return list(zip(xs.tolist(), ys.tolist()))


def _require_closed(w: Word) -> None:
    a, b = exponent_sums(w)
    if a or b:
        raise NotInDerivedSubgroup(f"exponent sums ({a}, {b}) are not both zero")


def winding_invariant(w: Word) -> LaurentPoly:
    """Winding numbers of the curve of w around every square centre.

    Each y-step contributes a signed vertical edge: an up-step from (a, b)
    is recorded as (a, b, +1), a down-step from (a, b) as (a, b - 1, -1).
    The square (i, j) then collects the signs of the edges (a, j, s) with
    a > i, i.e. the crossings of a ray going right from its centre.
    """
    _require_closed(w)
    if not w.letters:
        return LaurentPoly()
    dx, dy = _steps(w)
    xs = np.concatenate(([0], np.cumsum(dx)))[:-1]
    ys = np.concatenate(([0], np.cumsum(dy)))[:-1]
    vertical = dy != 0
    cols = xs[vertical]
    signs = dy[vertical]
    rows = ys[vertical] - (signs < 0)

    # aggregate edges per (row, column), ordered by row then column
    order = np.lexsort((cols, rows))
    rows, cols, signs = rows[order], cols[order], signs[order]
    keep = np.ones(len(rows), dtype=bool)
    keep[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
    starts = np.flatnonzero(keep)
    sums = np.add.reduceat(signs, starts) if len(starts) else signs
    rows, cols = rows[starts], cols[starts]

    coeffs: dict[tuple[int, int], int] = {}
    boundaries = np.flatnonzero(np.diff(rows)) + 1
    for seg in np.split(np.arange(len(rows)), boundaries):
        if not len(seg):
            continue
        row = int(rows[seg[0]])
        cs = cols[seg].tolist()
        ss = sums[seg].tolist()
        # suffix[t] = sum of signs of edges at columns cs[t], cs[t+1], ...
        acc = 0
        for t in range(len(cs) - 1, 0, -1):
            acc += ss[t]
            if acc:
                for i in range(cs[t - 1], cs[t]):
                    coeffs[(i, row)] = acc
    return LaurentPoly._wrap(coeffs)


def winding_oracle(w: Word) -> LaurentPoly:
    """Brute-force winding numbers by the crossing-number test.

    Every square in the bounding box of the curve, padded by one square on
    each side, gets the classical point-in-polygon winding number of its
    centre.  The padding ring must come out zero.
    """
    _require_closed(w)
    pts = np.array(curve_points(w), dtype=float)
    if len(pts) < 2:
        return LaurentPoly()
    x_lo, y_lo = pts.min(axis=0).astype(int) - 1
    x_hi, y_hi = pts.max(axis=0).astype(int) + 1
    gi, gj = np.meshgrid(np.arange(x_lo, x_hi), np.arange(y_lo, y_hi), indexing="ij")
    px, py = gi + 0.5, gj + 0.5
    wn = np.zeros(gi.shape, dtype=np.int64)
    for (x0, y0), (x1, y1) in zip(pts[:-1], pts[1:]):
        left = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        up = (y0 <= py) & (y1 > py) & (left > 0)
        down = (y0 > py) & (y1 <= py) & (left < 0)
        wn += up
        wn -= down
    ring = np.concatenate((wn[0], wn[-1], wn[:, 0], wn[:, -1]))
    assert not ring.any(), "winding must vanish outside the curve's bounding box"
    nz = np.nonzero(wn)
    return LaurentPoly._wrap({
        (int(gi[a, b]), int(gj[a, b])): int(wn[a, b]) for a, b in zip(*nz)
    })


def commutator_winding(u: Word, pz: LaurentPoly) -> LaurentPoly:
    """W([u, z]) from W(z) for z in F2': (X^i Y^j - 1) W(z), (i, j) the exponent sums of u."""
    i, j = exponent_sums(u)
    return translate(pz, (i, j)) - pz


def engel_winding(m: int) -> LaurentPoly:
    """W(e_m) built from W(e_1) by repeated commutation with y, without expanding the word."""
    from .word import engel_word

    p = winding_invariant(engel_word(1))
    for _ in range(m - 1):
        p = commutator_winding(WY, p)
    return p


def basic_commutator_winding(i: int, j: int) -> LaurentPoly:
    """W(e_{i,j}) by the same route: j - 1 commutations with y, then i with x."""
    p = engel_winding(j)
    for _ in range(i):
        p = commutator_winding(WX, p)
    return p


def word_with_winding(p: LaurentPoly) -> Word:
    """A word of F2' whose winding invariant is p.

    Each term c X^i Y^j is realised by the conjugate x^i y^j [x,y]^c y^-j x^-i.
    """
    c = commutator(WX, WY)
    parts = [conjugate(xy_power(i, j), power(c, k)) for (i, j), k in sorted(p.items())]
    return concat_all(parts) if parts else EMPTY
