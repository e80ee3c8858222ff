"""Coloring invariants Lambda: F2' -> Z_n and the word-problem deciders built on them.

An :class:`InvariantSpec` colors the grid square (i, j) with
``c(phi(i - i0, j - j0))`` where ``phi(i, j) = i*phi_x + j*phi_y mod n`` and
``(i0, j0)`` is the stored ``translate``.  In other words ``translate`` holds
the vector whose *negative* the square coordinates are shifted by before
``phi`` is applied, which is exactly the t_{-(i0, j0)} parametrisation of the
lower-bound family.  Equivalently::

    lambda_value(spec, P) == lambda_value(spec_at_origin, translate(P, (-i0, -j0)))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Union

from .coloring import (
    BLACK,
    WHITE,
    PGoodColoring,
    TwoColoring,
    standard_coloring,
)
from .laurent import LaurentPoly, apply_poly_symmetry, eval_at_ones
from .symmetry import Symmetry
from .winding import (
    NotInDerivedSubgroup,
    basic_commutator_winding,
    engel_winding,
    winding_invariant,
)
from .word import (
    Word,
    basic_commutator,
    concat,
    engel_word,
    exponent_sums,
    morse_identity,
    xy_power,
)

Coloring = Union[TwoColoring, PGoodColoring]

# basic commutators up to this weight are expanded into actual words
DIRECT_WEIGHT_LIMIT = 14


@dataclass(frozen=True)
class InvariantSpec:
    n: int
    phi_x: int
    phi_y: int
    translate: tuple[int, int] = (0, 0)
    coloring: Coloring = field(default=None, repr=False)

    def __post_init__(self):
        if self.coloring is None:
            raise ValueError("an invariant needs a coloring")
        if self.coloring.n != self.n:
            raise ValueError(f"coloring modulus {self.coloring.n} differs from n = {self.n}")
        object.__setattr__(self, "phi_x", self.phi_x % self.n)
        object.__setattr__(self, "phi_y", self.phi_y % self.n)

    def phi(self, i: int, j: int) -> int:
        i0, j0 = self.translate
        return ((i - i0) * self.phi_x + (j - j0) * self.phi_y) % self.n

    def weight(self, i: int, j: int) -> int:
        """Contribution factor of the square (i, j)."""
        col = self.coloring(self.phi(i, j))
        if isinstance(self.coloring, TwoColoring):
            return col.weight
        return col

    def to_json_dict(self) -> dict:
        kind = "two" if isinstance(self.coloring, TwoColoring) else f"p{self.coloring.p}"
        return {
            "n": self.n,
            "phi": [self.phi_x, self.phi_y],
            "translate": list(self.translate),
            "coloring": {"kind": kind, "colors": self.coloring.to_json_list()},
        }


def lambda_value(spec: InvariantSpec, p: LaurentPoly) -> int:
    total = 0
    for (i, j), c in p.items():
        total += spec.weight(i, j) * c
    return total % spec.n


def lambda_of_word(spec: InvariantSpec, w: Word) -> int:
    return lambda_value(spec, winding_invariant(w))


def horizontal_spec(i: int, n: int) -> InvariantSpec:
    """h^i: rows congruent to i, ..., i + n/2 - 1 are black."""
    return InvariantSpec(n, 0, 1, (0, 0), standard_coloring(i, n))


def vertical_spec(i: int, n: int) -> InvariantSpec:
    """v^i: columns congruent to i, ..., i + n/2 - 1 are black."""
    return InvariantSpec(n, 1, 0, (0, 0), standard_coloring(i, n))


def diagonal_spec(n: int, coloring: TwoColoring | None = None) -> InvariantSpec:
    return InvariantSpec(n, 1, 1, (0, 0), coloring or standard_coloring(0, n))


# -- area --------------------------------------------------------------------

def area(w: Word) -> int:
    return eval_at_ones(winding_invariant(w))


def area_modulus(n: int) -> int:
    return n // 2 if n % 2 == 0 else n


def area_bar(w: Word, n: int) -> int:
    return area(w) % area_modulus(n)


# -- Omega family --------------------------------------------------------------

@dataclass(frozen=True)
class OmegaVector:
    n: int
    h: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.h) != self.n // 2 or len(self.v) != self.n // 2:
            raise ValueError("Omega needs n/2 horizontal and n/2 vertical entries")

    def as_tuple(self) -> tuple[int, ...]:
        return self.h + self.v

    def is_zero(self) -> bool:
        return not any(self.h) and not any(self.v)


def _check_power_of_two(n: int, min_k: int = 2) -> None:
    if n < 2 ** min_k or n & (n - 1):
        raise ValueError(f"n must be a power of 2 that is at least {2 ** min_k}, got {n}")


def omega_of_poly(p: LaurentPoly, n: int) -> OmegaVector:
    _check_power_of_two(n)
    half = n // 2
    # per-row and per-column coefficient totals mod n
    rows = [0] * n
    cols = [0] * n
    for (i, j), c in p.items():
        rows[j % n] += c
        cols[i % n] += c

    def sweep(totals):
        out = []
        for i in range(half):
            black = sum(totals[(i + t) % n] for t in range(half))
            out.append((2 * black - sum(totals)) % n)
        return tuple(out)

    return OmegaVector(n, sweep(rows), sweep(cols))


def omega(w: Word, n: int) -> OmegaVector:
    return omega_of_poly(winding_invariant(w), n)


def omega_bar(w: Word, n: int) -> tuple[int, OmegaVector]:
    p = winding_invariant(w)
    return eval_at_ones(p) % (n // 2), omega_of_poly(p, n)


def omega_tilde_of_poly(p: LaurentPoly) -> tuple[int, ...]:
    return omega_of_poly(p, 4).as_tuple() + (lambda_value(diagonal_spec(4), p),)


def omega_tilde(w: Word) -> tuple[int, ...]:
    """(h^0, h^1, v^0, v^1, diagonal) mod 4."""
    return omega_tilde_of_poly(winding_invariant(w))


# -- word problems -------------------------------------------------------------

def _derived_part(u: Word, n: int) -> Word | None:
    a, b = exponent_sums(u)
    if a % n or b % n:
        return None
    return concat(xy_power(-a, -b), u)


def m24_is_trivial(u: Word) -> bool:
    """Decide u = 1 in the free metabelian group of exponent 4 on two generators."""
    v = _derived_part(u, 4)
    if v is None:
        return False
    return not any(omega_tilde(v))


def n2n_is_trivial(u: Word, n: int) -> bool:
    """Decide u = 1 in the free class-2 nilpotent group of exponent n on two generators."""
    if n < 1:
        raise ValueError("n must be positive")
    v = _derived_part(u, n)
    if v is None:
        return False
    return area_bar(v, n) == 0


# -- the lower-bound family ----------------------------------------------------

def gamma_orbits(n: int) -> list[list[tuple[int, int]]]:
    """Orbits of Z_8 x Z_2 on Z_n x Z_n, generated by (i, j) -> (i - n/8, j + n/8) and (i, j) -> (i + n/2, j)."""
    _check_power_of_two(n, 3)
    e = n // 8
    seen: set[tuple[int, int]] = set()
    orbits = []
    for i in range(n):
        for j in range(n):
            if (i, j) in seen:
                continue
            orbit = sorted({
                ((i - a * e + s * n // 2) % n, (j + a * e) % n)
                for a in range(8)
                for s in range(2)
            })
            seen.update(orbit)
            orbits.append(orbit)
    return orbits


def cotainf_colorings(n: int) -> tuple[TwoColoring, TwoColoring]:
    """c_0 and the good coloring obtained from it by swapping the colors of 0 and n/2."""
    c0 = standard_coloring(0, n)
    colors = list(c0.colors)
    colors[0], colors[n // 2] = colors[n // 2], colors[0]
    return c0, TwoColoring(n, tuple(colors)).validate()


def cotainf_family(n: int, representatives: list[tuple[int, int]] | None = None) -> list[InvariantSpec]:
    """Lambda_{phi_{1,b} t_{-(i0,j0)}, c} for b = 1 mod 8, c in {c_0, c_1}, (i0, j0) over orbit representatives."""
    _check_power_of_two(n, 3)
    if representatives is None:
        representatives = [orbit[0] for orbit in gamma_orbits(n)]
    odd_b = list(range(1, n, 8))
    return [
        InvariantSpec(n, 1, b, rep, c)
        for b in odd_b
        for c in cotainf_colorings(n)
        for rep in representatives
    ]


# -- identity reports ------------------------------------------------------------

def basic_commutator_poly(i: int, j: int) -> LaurentPoly:
    """W(e_{i,j}); expands the word when it is short enough, else commutes polynomials."""
    if i + j + 1 <= DIRECT_WEIGHT_LIMIT:
        return winding_invariant(basic_commutator(i, j))
    return basic_commutator_winding(i, j)


def engel_poly(m: int) -> LaurentPoly:
    if m + 1 <= DIRECT_WEIGHT_LIMIT:
        return winding_invariant(engel_word(m))
    return engel_winding(m)


@dataclass(frozen=True)
class EngelGammaReport:
    n: int
    first_vanishing: int
    trivial_on_gamma: int
    omegas: tuple[tuple[int, ...], ...]


def engel_gamma_report(n: int, bound: int = 40) -> EngelGammaReport:
    """Smallest j with Omega(e_j) = 0; Omega is then trivial on gamma_{j+1}(F2)."""
    _check_power_of_two(n)
    seen = []
    for j in range(1, bound + 1):
        vec = omega_of_poly(engel_poly(j), n)
        seen.append(vec.as_tuple())
        if vec.is_zero():
            return EngelGammaReport(n, j, j + 1, tuple(seen))
    raise LookupError(f"Omega(e_j) did not vanish for j <= {bound}")


@dataclass(frozen=True)
class MorseReport:
    k: int
    n: int
    satisfied_at: int
    divisible: bool
    violated_at: int
    omega_violated: tuple[int, ...]
    h0_minus_h1: int


def morse_report(k: int) -> MorseReport:
    if k < 2:
        raise ValueError("Morse certificates need k >= 2")
    n = 2 ** k
    from .laurent import divisible_by_one_minus_monomial

    divisible = divisible_by_one_minus_monomial(winding_invariant(morse_identity(k + 3)), (n, n))
    vec = omega(morse_identity(k + 1), n)
    return MorseReport(k, n, k + 3, divisible, k + 1, vec.as_tuple(), (vec.h[0] - vec.h[1]) % n)


@dataclass(frozen=True)
class BasicCommutatorReport:
    n: int
    expected: int
    values: dict[int, int]

    @property
    def all_match(self) -> bool:
        return all(v == self.expected for v in self.values.values())

    @property
    def none_divisible_by_8(self) -> bool:
        return all(v % 8 for v in self.values.values())


def basiccom_report(n: int) -> BasicCommutatorReport:
    """Diagonal invariant of e_{i, n-i+1} for i = 0..n."""
    _check_power_of_two(n, 3)
    spec = diagonal_spec(n)
    values = {i: lambda_value(spec, basic_commutator_poly(i, n - i + 1)) for i in range(n + 1)}
    return BasicCommutatorReport(n, (comb(n, n // 2) - 2) % n, values)


def engel_h0_closed_form(n: int) -> int:
    """h^0(e_{n+1}) = C(n, n/2) - 2 mod n."""
    return (comb(n, n // 2) - 2) % n


def vertical_via_swap(p: LaurentPoly, i: int, n: int) -> int:
    """v^i(P) computed as h^i(P(Y, X))."""
    return lambda_value(horizontal_spec(i, n), apply_poly_symmetry(p, Symmetry.SWAP_XY))

