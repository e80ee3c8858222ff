"""The acceptance criteria as callable checks.

Each criterion returns a :class:`CriterionResult` holding one :class:`Check`
per exact comparison.  Both the test suite and ``windlab verify`` run these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .coloring import (
    PGoodColoring,
    enumerate_good_colorings,
    random_good_coloring,
    random_p_good_coloring,
)
from .invariant import (
    InvariantSpec,
    area,
    area_bar,
    basiccom_report,
    cotainf_family,
    engel_h0_closed_form,
    engel_poly,
    gamma_orbits,
    horizontal_spec,
    lambda_of_word,
    lambda_value,
    m24_is_trivial,
    morse_report,
    n2n_is_trivial,
    omega_of_poly,
)
from .laurent import LaurentPoly, X, Y, reduce_mod_torus
from .quotient import complete_lattice, family_lattice, m24_word_problem_nf, normal_form, quotient_order
from .subgroup import (
    cotainf_image_order,
    omega_bar_image_generators,
    omega_bar_image_order,
    omega_image_generators,
    omega_image_order,
    omega_tilde_image_order,
    restricted_burnside_bound,
    shifted_representatives,
    subgroup_order_bfs,
)
from .winding import winding_invariant, winding_oracle
from .word import (
    commutator,
    concat,
    engel_word,
    morse_identity,
    parse_word,
    power,
    random_derived_word,
    random_nth_power_product,
    random_word,
)
from .word import X as WX
from .word import Y as WY

EJEMPLO_WORD = "x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4"


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, expected, got) -> None:
        self.checks.append(Check(name, expected, got))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        failed = [c for c in self.checks if not c.ok]
        tail = "; ".join(f"{c.name}: expected {c.expected}, got {c.got}" for c in failed)
        return f"[{status}] criterion {self.number:2d} {self.title}" + (f" ({tail})" if tail else "")


def _commutator_power(k: int):
    return power(commutator(WX, WY), k)


def criterion_1() -> CriterionResult:
    r = CriterionResult(1, "winding golden values")
    r.add("W([x,y])", LaurentPoly.constant(1), winding_invariant(commutator(WX, WY)))
    expected = 1 + 2 * X + Y + X * Y + Y ** 2 + X * Y ** 2 - X ** -1 * Y ** 3
    r.add("ejemplito polynomial", expected, winding_invariant(parse_word(EJEMPLO_WORD)))
    bad_engel = [m for m in range(1, 11) if winding_invariant(engel_word(m)) != -((Y - 1) ** (m - 1))]
    r.add("W(e_m) = -(Y-1)^(m-1), m = 1..10", [], bad_engel)
    bad_morse = []
    for m in range(3, 9):
        prod = LaurentPoly.constant(1)
        for i in range(m - 2):
            prod = prod * (1 - X ** (2 ** i) * Y ** (2 ** i))
        if winding_invariant(morse_identity(m)) != prod:
            bad_morse.append(m)
    r.add("Morse product formula, m = 3..8", [], bad_morse)
    return r


def criterion_2(count: int = 500, seed: int = 2) -> CriterionResult:
    r = CriterionResult(2, "winding equals the crossing-number oracle")
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(count):
        w = random_derived_word(rng, 200)
        if winding_invariant(w) != winding_oracle(w):
            mismatches += 1
    r.add(f"mismatches on {count} random words", 0, mismatches)
    return r


def criterion_3() -> CriterionResult:
    r = CriterionResult(3, "Lambda of the worked example")
    spec = horizontal_spec(0, 4)
    r.add("Lambda(z) in Z_4", 0, lambda_of_word(spec, parse_word(EJEMPLO_WORD)))
    return r


def _row_totals(p: LaurentPoly, n: int) -> LaurentPoly:
    rows = [0] * n
    for (_, j), c in p.items():
        rows[j % n] += c
    return LaurentPoly({(0, j): c for j, c in enumerate(rows)})


def criterion_4(seeds: int = 200, seed: int = 4) -> CriterionResult:
    r = CriterionResult(4, "nth-power products vanish under the coloring invariants")
    rng = random.Random(seed)
    for n in (4, 8, 16):
        colorings = enumerate_good_colorings(n)
        specs = [InvariantSpec(n, 0, 1, (0, 0), c) for c in colorings]
        bad = 0
        for s in range(seeds):
            z = random_nth_power_product(n, rng.randint(1, 4), 6, seed * 1000 + s)
            # a horizontal invariant only sees row totals
            q = _row_totals(winding_invariant(z), n)
            bad += any(lambda_value(sp, q) for sp in specs)
        r.add(f"horizontal, every good coloring, n = {n}", 0, bad)
    for n in (4, 8):
        bad = 0
        for s in range(seeds // 2):
            z = random_nth_power_product(n, rng.randint(1, 4), 6, seed * 2000 + s)
            p = winding_invariant(z)
            spec = InvariantSpec(
                n,
                rng.randrange(1, n, 2),
                rng.randrange(1, n, 2),
                (rng.randint(-8, 8), rng.randint(-8, 8)),
                random_good_coloring(n, rng),
            )
            bad += lambda_value(spec, p) != 0
        r.add(f"odd phi, translated, random good coloring, n = {n}", 0, bad)
    p_, n = 3, 9
    units = [u for u in range(1, n) if u % 3]
    bad = 0
    for s in range(seeds // 2):
        z = random_nth_power_product(n, rng.randint(1, 3), 5, seed * 3000 + s)
        spec = InvariantSpec(
            n, rng.choice(units), rng.choice(units),
            (rng.randint(-8, 8), rng.randint(-8, 8)),
            random_p_good_coloring(p_, n, rng),
        )
        bad += lambda_value(spec, winding_invariant(z)) % (n // p_) != 0
    r.add("3-good colorings, n = 9, vanishing mod 3", 0, bad)
    witness = InvariantSpec(4, 1, 1, (0, 0), PGoodColoring(2, 4, (0, 1, 0, 3)).validate())
    r.add("2-good witness in Z_4", 2, lambda_of_word(witness, parse_word("x^4 (x^-1 y)^4 y^-4")))
    return r


def criterion_5() -> CriterionResult:
    r = CriterionResult(5, "[x,y]^(n/2) is not a product of nth powers")
    for n in (4, 8, 16):
        r.add(f"h0([x,y]^{n // 2}) in Z_{n}", n // 2, lambda_of_word(horizontal_spec(0, n), _commutator_power(n // 2)))
    w = _commutator_power(2)
    r.add("m24 invariant decider on [x,y]^2", False, m24_is_trivial(w))
    r.add("m24 normal-form decider on [x,y]^2", False, m24_word_problem_nf(w))
    return r


def criterion_6() -> CriterionResult:
    r = CriterionResult(6, "Engel values")
    r.add("C(8,4)", 70, comb(8, 4))
    r.add("C(16,8)", 12870, comb(16, 8))
    for n in (8, 16):
        h0 = lambda_value(horizontal_spec(0, n), engel_poly(n + 1))
        r.add(f"h0(e_{n + 1}) = C({n},{n // 2}) - 2 mod {n}", engel_h0_closed_form(n), h0)
    r.add("h0(e_25) in Z_16", 8, lambda_value(horizontal_spec(0, 16), engel_poly(25)))
    r.add("Omega(e_10) = 0 at n = 8", True, omega_of_poly(engel_poly(10), 8).is_zero())
    r.add("Omega(e_26) = 0 at n = 16", True, omega_of_poly(engel_poly(26), 16).is_zero())
    r.add("Omega(e_25) != 0 at n = 16", False, omega_of_poly(engel_poly(25), 16).is_zero())
    r.add(
        "C(2^k, 2^(k-1)) = 6 mod 8, k = 2..10",
        [6] * 9,
        [comb(2 ** k, 2 ** (k - 1)) % 8 for k in range(2, 11)],
    )
    return r


def criterion_7() -> CriterionResult:
    r = CriterionResult(7, "Morse certificates")
    for k in (2, 3, 4):
        rep = morse_report(k)
        r.add(f"k = {k}: divisible by 1 - (XY)^{rep.n}", True, rep.divisible)
        r.add(f"k = {k}: h0 - h1 at level {k + 1}", 2, rep.h0_minus_h1)
    return r


def criterion_8() -> CriterionResult:
    r = CriterionResult(8, "image orders of Omega and Omega-bar")
    for n in (4, 8):
        r.add(f"|Im Omega|, n = {n}", 2 * (n // 2) ** n, omega_image_order(n))
        r.add(f"|Im Omega-bar|, n = {n}", (n // 2) ** (n + 1), omega_bar_image_order(n))
    r.add("BFS |Im Omega|, n = 4", omega_image_order(4), subgroup_order_bfs(omega_image_generators(4)))
    r.add("BFS |Im Omega-bar|, n = 4", omega_bar_image_order(4), subgroup_order_bfs(omega_bar_image_generators(4)))
    r.add("n^2 (n/2)^(n+1) at n = 16", 2 ** 59, 16 ** 2 * 8 ** 17)
    return r


def _m24_mixed_words(count: int, seed: int):
    rng = random.Random(seed)
    for s in range(count):
        if s % 2:
            yield random_word(rng, rng.randint(0, 60))
        else:
            w = random_nth_power_product(4, rng.randint(1, 3), 5, seed * 10000 + s)
            if s % 4 == 2:
                w = concat(w, random_derived_word(rng, 8))
            yield w


def criterion_9(count: int = 1000, seed: int = 9) -> CriterionResult:
    r = CriterionResult(9, "M(2,4) sandwich")
    tilde = omega_tilde_image_order()
    q = quotient_order(family_lattice(4))
    r.add("|Im Omega-tilde|", 2 ** 6, tilde)
    r.add("quotient order of the n = 4 relator family", 2 ** 6, q.order)
    disagree = sum(m24_is_trivial(w) != m24_word_problem_nf(w) for w in _m24_mixed_words(count, seed))
    r.add(f"decider disagreements on {count} words", 0, disagree)
    r.add("|M(2,4)| = 16 |M(2,4)'|", 2 ** 10, 16 * q.order)
    return r


def criterion_10(count: int = 100, seed: int = 10) -> CriterionResult:
    r = CriterionResult(10, "n = 8 quotient")
    fam = quotient_order(family_lattice(8))
    lat = complete_lattice(8)
    full = quotient_order(lat)
    r.add("2^57 divides the relator-family quotient", 0, fam.order % 2 ** 57)
    r.add("2^57 divides the complete-ideal quotient", 0, full.order % 2 ** 57)
    nonzero = 0
    for s in range(count):
        z = random_nth_power_product(8, random.Random(seed * 1000 + s).randint(1, 4), 6, seed * 1000 + s)
        nonzero += not normal_form(lat, reduce_mod_torus(winding_invariant(z), 8)).is_zero()
    r.add(f"nonzero normal forms among {count} 8th-power products", 0, nonzero)
    return r


def criterion_11() -> CriterionResult:
    r = CriterionResult(11, "R(2,8) bound pipeline")
    rep = restricted_burnside_bound(strict=False)
    r.add("Omega(z)", (4, 0, 0, 4, 4, 0, 0, 4), rep.omega_z)
    r.add("nine tuples equal the listed set", True, rep.listed_tuples_match)
    r.add("Schreier rank", 4097, rep.schreier_rank)
    r.add("base exponent 12 + 4097", 4109, rep.base_exponent)
    r.add("conjugate-tuple subgroup order", 2 ** 6, rep.subgroup_order)
    r.add("final exponent", 4115, rep.total_exponent)
    return r


def criterion_12() -> CriterionResult:
    r = CriterionResult(12, "lower-bound family at n = 8")
    n = 8
    orbits = gamma_orbits(n)
    r.add("orbit count n^2/16", n * n // 16, len(orbits))
    r.add("orbit sizes", [16] * (n * n // 16), [len(o) for o in orbits])
    r.add("family size", 8, len(cotainf_family(n)))
    order = cotainf_image_order(n)
    r.add("image order >= 2^4", True, order >= 2 ** 4)
    r.add("representative independence", order, cotainf_image_order(n, shifted_representatives(n, 5)))
    return r


def criterion_13() -> CriterionResult:
    r = CriterionResult(13, "basic commutator values")
    for n in (8, 16):
        rep = basiccom_report(n)
        r.add(f"all entries = C({n},{n // 2}) - 2 mod {n}", True, rep.all_match)
        r.add(f"no entry divisible by 8, n = {n}", True, rep.none_divisible_by_8)
    return r


def criterion_14() -> CriterionResult:
    r = CriterionResult(14, "N(2,n) decider and area formulas")
    for n in (4, 6, 8):
        r.add(f"[x,y]^{n // 2} trivial in N(2,{n})", True, n2n_is_trivial(_commutator_power(n // 2), n))
    for n in range(2, 11):
        r.add(f"A([x,y]^{n})", n, area(_commutator_power(n)))
        t = parse_word(f"x^{n} (x^-1 y)^{n} y^-{n}")
        r.add(f"A(x^{n}(x^-1y)^{n}y^-{n})", n * (n - 1) // 2, area(t))
    r.add("area_bar([x,y]^3, 6)", 0, area_bar(_commutator_power(3), 6))
    return r


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
    13: criterion_13,
    14: criterion_14,
}

# criteria whose stated targets cannot be met; see the README
KNOWN_FAILURES = frozenset({11})


def run_all(numbers=None) -> list[CriterionResult]:
    return [CRITERIA[k]() for k in (numbers or sorted(CRITERIA))]
