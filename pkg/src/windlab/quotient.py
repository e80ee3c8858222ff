"""Relation lattices on the torus window Z^(n*n) and their quotients.

Relator windings are reduced mod X^n = 1, Y^n = 1; their n*n cyclic
translates span a lattice L.  The Hermite basis of L gives a canonical coset
representative for every torus piece, and the Smith diagonal gives the
quotient Z^(n*n) / L.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .invariant import _derived_part
from .laurent import TorusPiece, reduce_mod_torus
from .lattice import hnf, hnf_modular, reduce_vector, smith_diagonal
from .subgroup import factor_power
from .winding import NotInDerivedSubgroup, winding_invariant
from .word import Word, format_word, named_power_relators, named_relator_family

DEFAULT_MAX_N = 8
LARGE_MAX_N = 16


@dataclass(frozen=True)
class RelationLattice:
    n: int
    basis: tuple[tuple[int, ...], ...]
    relator_names: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return self.n * self.n

    @property
    def is_full_rank(self) -> bool:
        return len(self.basis) == self.dim


@dataclass(frozen=True)
class QuotientSummary:
    n: int
    relators: tuple[str, ...]
    elementary_divisors: tuple[int, ...]
    order: int | None  # None when the quotient is infinite

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "relators": list(self.relators),
            "elementary_divisors": list(self.elementary_divisors),
            "order": str(self.order) if self.is_finite else "infinite",
            "order_factored": factor_power(self.order) if self.is_finite else "infinite",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _translates(piece: TorusPiece) -> list[tuple[int, ...]]:
    n = piece.n
    return [piece.translate(di, dj).entries for di in range(n) for dj in range(n)]


def _piece(w: Word, n: int) -> TorusPiece:
    if not w.in_derived_subgroup():
        raise NotInDerivedSubgroup(f"relator {format_word(w)} is not in the derived subgroup")
    return reduce_mod_torus(winding_invariant(w), n)


def _single_square_modulus(pieces: Sequence[TorusPiece]) -> int | None:
    best = None
    for p in pieces:
        nz = [c for c in p.entries if c]
        if len(nz) == 1:
            m = abs(nz[0])
            best = m if best is None else min(best, m)
    return best


def build_lattice(
    relators: Sequence[Word],
    n: int,
    names: Sequence[str] | None = None,
    allow_large: bool = False,
    threads: int = 1,
) -> RelationLattice:
    """HNF of all cyclic translates of the reduced relator pieces."""
    limit = LARGE_MAX_N if allow_large else DEFAULT_MAX_N
    if n < 2 or n > limit:
        raise ValueError(f"n = {n} outside 2..{limit}" + ("" if allow_large else "; pass allow_large for n up to 16"))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            pieces = list(pool.map(lambda w: _piece(w, n), relators))
    else:
        pieces = [_piece(w, n) for w in relators]
    rows = [row for p in pieces for row in _translates(p)]
    # a single-square piece c*delta puts c*e_k in L for every k
    m = _single_square_modulus(pieces)
    if m is not None:
        basis = hnf_modular(rows, [m] * (n * n))
    else:
        basis = hnf(rows, n * n)
    if names is None:
        names = [format_word(w, fold=True) for w in relators]
    return RelationLattice(n, tuple(tuple(r) for r in basis), tuple(names))


def family_lattice(n: int, allow_large: bool = False) -> RelationLattice:
    named = named_relator_family(n)
    return build_lattice([w for _, w in named], n, [k for k, _ in named], allow_large)


def quotient_order(lat: RelationLattice) -> QuotientSummary:
    d = smith_diagonal(lat.basis) if lat.basis else []
    d = d + [0] * (lat.dim - len(d))
    nontrivial = tuple(x for x in d if x != 1)
    order = None if 0 in d else prod(d)
    return QuotientSummary(lat.n, lat.relator_names, nontrivial, order)


def normal_form(lat: RelationLattice, piece: TorusPiece) -> TorusPiece:
    """Canonical representative of the coset piece + L."""
    if piece.n != lat.n:
        raise ValueError("piece and lattice live on different tori")
    return TorusPiece(lat.n, tuple(reduce_vector(lat.basis, piece.entries)))


def m24_word_problem_nf(u: Word, lat: RelationLattice | None = None) -> bool:
    """u = 1 in M(2,4) iff the exponent sums vanish mod 4 and the remaining piece reduces to 0."""
    if lat is None:
        lat = _m24_lattice()
    v = _derived_part(u, 4)
    if v is None:
        return False
    return normal_form(lat, reduce_mod_torus(winding_invariant(v), 4)).is_zero()


_M24_CACHE: list[RelationLattice] = []


def _m24_lattice() -> RelationLattice:
    if not _M24_CACHE:
        _M24_CACHE.append(family_lattice(4))
    return _M24_CACHE[0]


# -- closed-form bounds ----------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    name: str
    value: int | None
    applicable: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "value": str(self.value) if self.value is not None else None,
            "factored": factor_power(self.value) if self.value is not None else None,
            "note": self.note,
        }


def _prime_power(n: int) -> tuple[int, int] | None:
    for p in range(2, n + 1):
        if n % p == 0:
            k, x = 0, n
            while x % p == 0:
                x //= p
                k += 1
            return (p, k) if x == 1 else None
    return None


def newman_upper(d: int, n: int) -> int:
    return n ** (1 + d + (d - 1) * n ** d)


def newman_lower(d: int, p: int, k: int) -> int:
    return p ** (1 + d * (k - 1) + (d - 1) * p ** ((k - 1) * d))


def newman_two_lower(n: int) -> int:
    return n * n * 2 ** (n * n // 4 - 1)


def newman_two_upper(n: int) -> int:
    return n ** (n * n + 3)


def cotainf_lower(n: int) -> int:
    return n * n * 2 ** (5 * n * n // 16 - 1)


def cotasup(n: int) -> int:
    return n ** ((n - 1) ** 2)


def omega_bar_lower(n: int) -> int:
    return n * n * (n // 2) ** (n + 1)


def closed_form_bounds(d: int, n: int) -> list[Bound]:
    """All closed-form order bounds for M(d, n), each flagged with whether it applies."""
    pk = _prime_power(n)
    two_power = pk is not None and pk[0] == 2
    k = pk[1] if pk else 0
    two_gen = d == 2
    out = [
        Bound("newman_upper", newman_upper(d, n), d >= 1 and n >= 2),
        Bound("newman_lower", newman_lower(d, *pk) if pk else None, pk is not None),
    ]
    rows = [
        ("newman_two_lower", newman_two_lower, two_gen and two_power and k >= 1),
        ("newman_two_upper", newman_two_upper, two_gen and two_power and k >= 1),
        ("omega_bar_lower", omega_bar_lower, two_gen and two_power and k >= 2),
        ("cotainf_lower", cotainf_lower, two_gen and two_power and k >= 3),
        ("cotasup_upper", cotasup, two_gen and n >= 3),
    ]
    for name, f, ok in rows:
        out.append(Bound(name, f(n) if ok else None, ok))
    if d == 2 and n == 16:
        out.append(Bound("known_range", None, True, "2^87 <= |M(2,16)| <= 2^376"))
    return out


def bounds_table(d: int, n: int) -> dict:
    return {"d": d, "n": n, "bounds": [b.to_json_dict() for b in closed_form_bounds(d, n)]}


def complete_lattice(n: int, allow_large: bool = False) -> RelationLattice:
    """Lattice of the full relation ideal on the torus; its quotient is M(2,n)'."""
    named = named_power_relators(n)
    return build_lattice([w for _, w in named], n, [k for k, _ in named], allow_large)
