"""Colorings of Z_n: black/white good colorings and Z_n-valued p-good colorings."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

MAX_ENUMERATION_N = 24


class Color(Enum):
    BLACK = 1
    WHITE = -1

    @property
    def weight(self) -> int:
        return self.value

    def opposite(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


BLACK, WHITE = Color.BLACK, Color.WHITE


@dataclass(frozen=True)
class TwoColoring:
    n: int
    colors: tuple[Color, ...]

    def __post_init__(self):
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")

    def __call__(self, a: int) -> Color:
        return self.colors[a % self.n]

    def is_good(self) -> bool:
        n = self.n
        if n % 2:
            return False
        return all(self.colors[a] is not self.colors[(a + n // 2) % n] for a in range(n))

    def validate(self) -> "TwoColoring":
        if not self.is_good():
            raise ValueError("coloring is not good: some a and a + n/2 share a color")
        return self

    def to_json_list(self) -> list[str]:
        return ["B" if c is BLACK else "W" for c in self.colors]

    @classmethod
    def from_json_list(cls, data: Sequence[str]) -> "TwoColoring":
        lookup = {"B": BLACK, "W": WHITE}
        return cls(len(data), tuple(lookup[s] for s in data))


@dataclass(frozen=True)
class PGoodColoring:
    p: int
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        object.__setattr__(self, "colors", tuple(c % self.n for c in self.colors))

    def __call__(self, a: int) -> int:
        return self.colors[a % self.n]

    def is_good(self) -> bool:
        n, p = self.n, self.p
        if n % p:
            return False
        step = n // p
        return all(sum(self.colors[(a + t * step) % n] for t in range(p)) % n == 0 for a in range(step))

    def validate(self) -> "PGoodColoring":
        if not self.is_good():
            raise ValueError(f"coloring is not {self.p}-good")
        return self

    def to_json_list(self) -> list[int]:
        return list(self.colors)


def standard_coloring(i: int, n: int) -> TwoColoring:
    """c_i: black on i, i+1, ..., i + n/2 - 1, white elsewhere."""
    if n % 2:
        raise ValueError("standard colorings need even n")
    if not 0 <= i < n // 2:
        raise ValueError(f"index {i} outside 0..{n // 2 - 1}")
    black = {(i + t) % n for t in range(n // 2)}
    return TwoColoring(n, tuple(BLACK if a in black else WHITE for a in range(n)))


def coloring_from_half(first_half: Sequence[Color]) -> TwoColoring:
    """The unique good coloring with the given colors on 0..n/2-1."""
    half = tuple(first_half)
    return TwoColoring(2 * len(half), half + tuple(c.opposite() for c in half))


def enumerate_good_colorings(n: int) -> list[TwoColoring]:
    if n % 2 or n < 2:
        raise ValueError("good colorings need even n >= 2")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is capped at n = {MAX_ENUMERATION_N}")
    return [coloring_from_half(h) for h in itertools.product((BLACK, WHITE), repeat=n // 2)]


def random_good_coloring(n: int, rng: random.Random) -> TwoColoring:
    return coloring_from_half([rng.choice((BLACK, WHITE)) for _ in range(n // 2)])


def random_p_good_coloring(p: int, n: int, rng: random.Random) -> PGoodColoring:
    step = n // p
    colors = [0] * n
    for a in range(step):
        free = [rng.randrange(n) for _ in range(p - 1)]
        for t, c in enumerate(free):
            colors[a + t * step] = c
        colors[a + (p - 1) * step] = -sum(free) % n
    return PGoodColoring(p, n, tuple(colors))


def embed_as_p_good(c: TwoColoring) -> PGoodColoring:
    """BLACK -> 1, WHITE -> n - 1, a 2-good coloring with the same signed sums mod n."""
    return PGoodColoring(2, c.n, tuple(1 if col is BLACK else c.n - 1 for col in c.colors))


def progression_balance(c: TwoColoring, a: int, b: int, length: int) -> int:
    """Black minus white count along a, a+b, ..., a+(length-1)b read mod n."""
    if length < 1:
        raise ValueError("progression length must be positive")
    return sum(c((a + t * b)).weight for t in range(length))


def p_good_progression_sum(c: PGoodColoring, a: int, b: int, length: int) -> int:
    if length < 1:
        raise ValueError("progression length must be positive")
    return sum(c(a + t * b) for t in range(length)) % c.n


def matching_oracle(n: int, d: int, p: int = 2) -> list[tuple[int, ...]] | None:
    """Partition [0, n) into p-term progressions of difference d, or None if p*d does not divide n."""
    if d < 1 or n % (p * d):
        return None
    parts = [
        tuple(base + i + t * d for t in range(p))
        for base in range(0, n, p * d)
        for i in range(d)
    ]
    covered = sorted(x for part in parts for x in part)
    assert covered == list(range(n))
    assert all(part[t + 1] - part[t] == d for part in parts for t in range(p - 1))
    return parts
