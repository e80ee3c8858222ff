"""Sparse integer Laurent polynomials in X, Y.

A :class:`LaurentPoly` maps exponent pairs ``(i, j)`` to nonzero integer
coefficients.  Drawn on the grid, coefficient ``(i, j)`` sits in the unit
square whose lower-left corner is ``(i, j)``, so polynomials double as
"pieces".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .symmetry import Symmetry


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in items:
            key = (int(i), int(j))
            c[key] = c.get(key, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def _wrap(cls, c: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p._c = c
        return p

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "LaurentPoly":
        return cls._wrap({(i, j): c} if c else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, 0, c)

    # -- container protocol
    def items(self):
        return self._c.items()

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._c)

    def coeff(self, i: int, j: int) -> int:
        return self._c.get((i, j), 0)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._c.get(key, 0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- ring operations
    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._wrap(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return scalar_mul(other, self)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[tuple[int, int], int] = {}
        for (i, j), a in self._c.items():
            for (k, l), b in other._c.items():
                key = (i + k, j + l)
                c[key] = c.get(key, 0) + a * b
        return LaurentPoly._wrap({k: v for k, v in c.items() if v})

    def __rmul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            (i, j), c = next(iter(self._c.items()))
            base, k = LaurentPoly.monomial(-i, -j, c), -k
        else:
            base = self
        out = LaurentPoly.constant(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def translate(self, shift: tuple[int, int]) -> "LaurentPoly":
        return translate(self, shift)

    def __call__(self, x: int, y: int) -> int:
        """Evaluate at integer points where this makes sense (x, y = +-1)."""
        total = 0
        for (i, j), c in self._c.items():
            total += c * _ipow(x, i) * _ipow(y, j)
        return total

    # -- text and JSON
    def to_text(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"{c}*X^{i}*Y^{j}" for (i, j), c in sorted(self._c.items()))

    def to_json_list(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self._c.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_list())

    @classmethod
    def from_json(cls, data: str | list) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(((i, j), c) for i, j, c in data)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"


def _ipow(base: int, e: int) -> int:
    if e >= 0:
        return base ** e
    if base not in (1, -1):
        raise ValueError("negative exponent at a non-unit point")
    return base ** (-e)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
X = LaurentPoly.monomial(1, 0)
Y = LaurentPoly.monomial(0, 1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def negate(p: LaurentPoly) -> LaurentPoly:
    return -p


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def scalar_mul(k: int, p: LaurentPoly) -> LaurentPoly:
    if k == 0:
        return ZERO
    return LaurentPoly._wrap({key: k * v for key, v in p.items()})


def translate(p: LaurentPoly, shift: tuple[int, int]) -> LaurentPoly:
    """Multiply by the monomial X^a Y^b."""
    a, b = shift
    return LaurentPoly._wrap({(i + a, j + b): v for (i, j), v in p.items()})


def eval_at_ones(p: LaurentPoly) -> int:
    return sum(v for _, v in p.items())


def _coset_key(i: int, j: int, a: int, b: int, g: int, u: int, v: int) -> tuple[int, int]:
    # (a, b) = g * (a', b'); u a' + v b' = 1
    ap, bp = a // g, b // g
    return (bp * i - ap * j, (u * i + v * j) % g)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def divisible_by_one_minus_monomial(p: LaurentPoly, v: tuple[int, int]) -> bool:
    """True iff p is a multiple of 1 - X^a Y^b.

    The quotient ring by (1 - X^a Y^b) is the group ring of Z^2 / Z(a, b),
    so divisibility means every coset of Z(a, b) carries coefficient sum 0.
    """
    a, b = v
    if a == 0 and b == 0:
        raise ValueError("the monomial must be nontrivial")
    g = gcd(a, b)
    _, u, w = _xgcd(a // g, b // g)
    sums: dict[tuple[int, int], int] = {}
    for (i, j), c in p.items():
        key = _coset_key(i, j, a, b, g, u, w)
        sums[key] = sums.get(key, 0) + c
    return not any(sums.values())


_POLY_SUBST = {
    Symmetry.SWAP_XY: lambda i, j: (j, i),
    Symmetry.INV_X: lambda i, j: (-i, j),
    Symmetry.INV_Y: lambda i, j: (i, -j),
}


def apply_poly_symmetry(p: LaurentPoly, sym: Symmetry) -> LaurentPoly:
    f = _POLY_SUBST[sym]
    return LaurentPoly._wrap({f(i, j): c for (i, j), c in p.items()})


@dataclass(frozen=True)
class TorusPiece:
    """A polynomial with exponents read mod n; entry (i, j) is stored at i*n + j."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"a torus piece for n={self.n} needs {self.n * self.n} entries")

    @classmethod
    def zero(cls, n: int) -> "TorusPiece":
        return cls(n, (0,) * (n * n))

    def at(self, i: int, j: int) -> int:
        return self.entries[(i % self.n) * self.n + (j % self.n)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "TorusPiece") -> "TorusPiece":
        self._check(other)
        return TorusPiece(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "TorusPiece") -> "TorusPiece":
        self._check(other)
        return TorusPiece(self.n, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "TorusPiece":
        return TorusPiece(self.n, tuple(-a for a in self.entries))

    def _check(self, other: "TorusPiece") -> None:
        if other.n != self.n:
            raise ValueError("torus pieces of different sizes")

    def translate(self, di: int, dj: int) -> "TorusPiece":
        n = self.n
        out = [0] * (n * n)
        for idx, c in enumerate(self.entries):
            if c:
                i, j = divmod(idx, n)
                out[((i + di) % n) * n + (j + dj) % n] = c
        return TorusPiece(n, tuple(out))

    def to_poly(self) -> LaurentPoly:
        n = self.n
        return LaurentPoly((divmod(idx, n), c) for idx, c in enumerate(self.entries) if c)


def reduce_mod_torus(p: LaurentPoly, n: int) -> TorusPiece:
    if n < 2:
        raise ValueError("torus reduction needs n >= 2")
    out = [0] * (n * n)
    for (i, j), c in p.items():
        out[(i % n) * n + (j % n)] += c
    return TorusPiece(n, tuple(out))
