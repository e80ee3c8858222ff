"""Orders of subgroups of finite abelian groups Z_{m_1} x ... x Z_{m_r}.

The subgroup generated by vectors g_1..g_k has order prod(m) / |Z^r / (L + M)|
where L is the integer span of the lifted generators and M = diag(m).  The
index comes from the Smith diagonal of the stacked matrix [G; M].
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import prod
from .invariant import (
    _check_power_of_two,
    cotainf_family,
    gamma_orbits,
    lambda_value,
    omega,
    omega_of_poly,
)
from .laurent import LaurentPoly
from .lattice import hnf, smith_diagonal
from .word import conjugate, parse_word, xy_power

BFS_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ResidueVectorSet:
    """Generators of a subgroup of Z_n^r.

    ``moduli`` overrides the modulus per coordinate; by default every
    coordinate is read mod n.
    """

    n: int
    r: int
    generators: tuple[tuple[int, ...], ...] = ()
    moduli: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.moduli:
            object.__setattr__(self, "moduli", (self.n,) * self.r)
        if len(self.moduli) != self.r:
            raise ValueError("one modulus per coordinate is required")
        gens = []
        for g in self.generators:
            if len(g) != self.r:
                raise ValueError(f"generator of length {len(g)} in dimension {self.r}")
            gens.append(tuple(int(x) % m for x, m in zip(g, self.moduli)))
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def ambient_order(self) -> int:
        return prod(self.moduli)


def _quotient_diagonal(gens: ResidueVectorSet) -> list[int]:
    diag_rows = [[m if i == j else 0 for j in range(gens.r)] for i, m in enumerate(gens.moduli)]
    return smith_diagonal([list(g) for g in gens.generators] + diag_rows)


def elementary_divisors(gens: ResidueVectorSet) -> list[int]:
    """Invariant factors (> 1) of the generated subgroup.

    The subgroup is Z^k modulo the relations {c : c G in M}, read off from the
    Hermite form of [G | I_k ; M | 0]: rows vanishing on the first block.
    """
    k, r = len(gens.generators), gens.r
    if not k:
        return []
    rows = [list(g) + [int(b == a) for b in range(k)] for a, g in enumerate(gens.generators)]
    rows += [[m * (j == i) for j in range(r)] + [0] * k for i, m in enumerate(gens.moduli)]
    relations = [row[r:] for row in hnf(rows, r + k) if not any(row[:r])]
    d = smith_diagonal(relations) if relations else []
    return [x for x in d if x != 1]


def subgroup_order(gens: ResidueVectorSet) -> int:
    """Order of the subgroup of Z_m generated by ``gens``."""
    if not gens.generators:
        return 1
    index = prod(_quotient_diagonal(gens))
    return gens.ambient_order // index


def subgroup_order_bfs(gens: ResidueVectorSet) -> int:
    """Closure by breadth-first search; only for ambient groups of order <= 10^6."""
    if gens.ambient_order > BFS_LIMIT:
        raise ValueError(f"ambient group of order {gens.ambient_order} is too large for closure")
    zero = (0,) * gens.r
    seen = {zero}
    queue = deque([zero])
    while queue:
        v = queue.popleft()
        for g in gens.generators:
            w = tuple((a + b) % m for a, b, m in zip(v, g, gens.moduli))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen)


def factor_power(order: int) -> str:
    """Prime factorisation as text, e.g. 2^17 or 2^3*3^2."""
    if order == 1:
        return "1"
    parts = []
    p, x = 2, order
    while p * p <= x:
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        if e:
            parts.append(f"{p}^{e}")
        p += 1
    if x > 1:
        parts.append(f"{x}^1")
    return "*".join(parts)


# -- image orders of the invariants ------------------------------------------

def _square_pieces(n: int):
    for i in range(n):
        for j in range(n):
            yield LaurentPoly.monomial(i, j)


def omega_image_generators(n: int) -> ResidueVectorSet:
    _check_power_of_two(n)
    gens = tuple(omega_of_poly(p, n).as_tuple() for p in _square_pieces(n))
    return ResidueVectorSet(n, n, gens)


def omega_image_order(n: int) -> int:
    """|Im Omega|; single squares generate the image since Lambda is linear."""
    return subgroup_order(omega_image_generators(n))


def omega_bar_image_generators(n: int) -> ResidueVectorSet:
    _check_power_of_two(n)
    gens = tuple((1,) + omega_of_poly(p, n).as_tuple() for p in _square_pieces(n))
    return ResidueVectorSet(n, n + 1, gens, (n // 2,) + (n,) * n)


def omega_bar_image_order(n: int) -> int:
    """|Im Omega-bar|, the area mod n/2 prepended to Omega."""
    return subgroup_order(omega_bar_image_generators(n))


def omega_tilde_image_order() -> int:
    from .invariant import omega_tilde_of_poly

    gens = tuple(omega_tilde_of_poly(p) for p in _square_pieces(4))
    return subgroup_order(ResidueVectorSet(4, 5, gens))


# -- the R(2,8) bound ------------------------------------------------------------

BURNSIDE_2_4_EXPONENT = 12  # |B(2,4)| = 2^12, taken as known input


@dataclass(frozen=True)
class RestrictedBurnsideBound:
    omega_z: tuple[int, ...]
    conjugate_tuples: tuple[tuple[int, ...], ...]
    listed_tuples_match: bool
    subgroup_order: int
    schreier_rank: int
    base_exponent: int
    total_exponent: int

    @property
    def base(self) -> int:
        return 2 ** self.base_exponent

    @property
    def total(self) -> int:
        return 2 ** self.total_exponent


def _listed_tuples() -> set[tuple[int, ...]]:
    halves = [(4, 0, 0, 4), (4, 4, 0, 0), (0, 4, 4, 0)]
    return {a + b for a in halves for b in halves}


def restricted_burnside_bound(strict: bool = True) -> RestrictedBurnsideBound:
    """Omega over n = 8 of z and its nine conjugates, and the resulting bound on |R(2,8)|.

    With ``strict`` the generated subgroup must have order 2^6; otherwise the
    computed order is reported as is and the exponent follows from it.
    """
    z = parse_word("(x^4 (x^-1 y)^4 y^-4)^2")
    tuples = tuple(
        omega(conjugate(xy_power(i, j), z), 8).as_tuple() for i in range(3) for j in range(3)
    )
    order = subgroup_order(ResidueVectorSet(8, 8, tuples))
    if strict:
        assert order == 2 ** 6, f"conjugate tuples generate a subgroup of order {order}, not 2^6"
    # Schreier: a subgroup of index N in F_2 is free of rank 1 + N
    rank = 1 + 2 ** BURNSIDE_2_4_EXPONENT
    base = BURNSIDE_2_4_EXPONENT + rank
    return RestrictedBurnsideBound(
        omega_z=omega(z, 8).as_tuple(),
        conjugate_tuples=tuples,
        listed_tuples_match=set(tuples) == _listed_tuples(),
        subgroup_order=order,
        schreier_rank=rank,
        base_exponent=base,
        total_exponent=base + order.bit_length() - 1,
    )


# -- the lower-bound family ----------------------------------------------------

COTAINF_MAX_N = 16


def cotainf_image_generators(n: int, representatives=None) -> ResidueVectorSet:
    _check_power_of_two(n, 3)
    if n > COTAINF_MAX_N:
        raise ValueError(f"the image check is capped at n = {COTAINF_MAX_N}")
    specs = cotainf_family(n, representatives)
    gens = tuple(
        tuple(lambda_value(s, 2 * p) for s in specs) for p in _square_pieces(n)
    )
    return ResidueVectorSet(n, len(specs), gens)


def cotainf_image_order(n: int, representatives=None) -> int:
    return subgroup_order(cotainf_image_generators(n, representatives))


def cotainf_image_check(n: int, representatives=None) -> int:
    """|Im psi| on even window polynomials; asserts the 2^(n^2/16) lower bound."""
    order = cotainf_image_order(n, representatives)
    assert order >= 2 ** (n * n // 16), f"image order {order} below 2^{n * n // 16}"
    return order


def shifted_representatives(n: int, shift: int = 1) -> list[tuple[int, int]]:
    """An alternative orbit transversal: the shift-th element of each orbit."""
    return [orbit[shift % len(orbit)] for orbit in gamma_orbits(n)]


def orbit_sizes(n: int) -> list[int]:
    return [len(o) for o in gamma_orbits(n)]

