"""Words in the free group F(x, y).

Letters are stored as small signed integers: ``1`` is x, ``-1`` is x^-1,
``2`` is y and ``-2`` is y^-1.  A :class:`Word` is always freely reduced.
"""

from __future__ import annotations

import random
import sys
from enum import IntEnum
from typing import Iterable, Iterator, NamedTuple

from .symmetry import Symmetry


class Generator(IntEnum):
    X_GEN = 1
    Y_GEN = 2


class Letter(NamedTuple):
    gen: Generator
    sign: int


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _reduce(codes: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


class Word:
    """A freely reduced word on x and y."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        codes = tuple(letters)
        for c in codes:
            if c not in (1, -1, 2, -2):
                raise ValueError(f"invalid letter code {c!r}")
        object.__setattr__(self, "letters", _reduce(codes))

    @classmethod
    def _trusted(cls, reduced: tuple[int, ...]) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", reduced)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        for c in self.letters:
            yield Letter(Generator(abs(c)), 1 if c > 0 else -1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __invert__(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self, fold=True)!r})"

    def is_empty(self) -> bool:
        return not self.letters

    def in_derived_subgroup(self) -> bool:
        return exponent_sum(self, Generator.X_GEN) == 0 and exponent_sum(self, Generator.Y_GEN) == 0


EMPTY = Word._trusted(())
X = Word._trusted((1,))
Y = Word._trusted((2,))


def free_reduce(w: Word | Iterable[int]) -> Word:
    if isinstance(w, Word):
        return Word._trusted(_reduce(w.letters))
    return Word(w)


def concat(a: Word, b: Word) -> Word:
    # only the junction can cancel
    la, lb = a.letters, b.letters
    k = 0
    while k < len(la) and k < len(lb) and la[-1 - k] == -lb[k]:
        k += 1
    return Word._trusted(la[: len(la) - k] + lb[k:])


def concat_all(words: Iterable[Word]) -> Word:
    out: list[int] = []
    for w in words:
        for c in w.letters:
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return Word._trusted(tuple(out))


def invert(w: Word) -> Word:
    return Word._trusted(tuple(-c for c in reversed(w.letters)))


def conjugate(u: Word, z: Word) -> Word:
    """u z u^-1."""
    return concat_all((u, z, invert(u)))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return concat_all((a, b, invert(a), invert(b)))


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = invert(w), -k
    if k == 0 or not w.letters:
        return EMPTY
    # split w = p c p^-1 with c cyclically reduced, so w^k = p c^k p^-1
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    core = letters[i : j + 1]
    return Word._trusted(letters[:i] + core * k + letters[j + 1 :])


def exponent_sum(w: Word, g: Generator) -> int:
    code = int(g)
    return sum(1 if c == code else -1 for c in w.letters if abs(c) == code)


def exponent_sums(w: Word) -> tuple[int, int]:
    a = b = 0
    for c in w.letters:
        if c == 1:
            a += 1
        elif c == -1:
            a -= 1
        elif c == 2:
            b += 1
        else:
            b -= 1
    return a, b


def xy_power(a: int, b: int) -> Word:
    """x^a y^b."""
    return Word._trusted((1 if a > 0 else -1,) * abs(a) + (2 if b > 0 else -2,) * abs(b))


# -- parsing and printing ---------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise WordSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def word(self) -> Word:
        parts = []
        while self.peek() in ("x", "y", "(", "[", "1"):
            parts.append(self.term())
        return concat_all(parts)

    def term(self) -> Word:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            base = power(base, self.integer())
        return base

    def atom(self) -> Word:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return X
        if ch == "y":
            self.pos += 1
            return Y
        if ch == "1":
            self.pos += 1
            return EMPTY
        if ch == "(":
            self.pos += 1
            inner = self.word()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            a = self.word()
            self.expect(",")
            b = self.word()
            self.expect("]")
            return commutator(a, b)
        raise WordSyntaxError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        self.skip()
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            raise WordSyntaxError("expected an integer exponent", self.pos)
        value = int(self.text[start:self.pos].replace(" ", ""))
        if abs(value) > sys.maxsize:
            raise OverflowError(f"exponent {value} at position {start} exceeds the platform integer range")
        return value


def parse_word(text: str) -> Word:
    """Parse the word grammar.

    ``x``, ``y``, ``1`` (the identity), parentheses, commutators ``[a,b]``
    and integer exponents ``^k``; whitespace is ignored.
    """
    p = _Parser(text)
    w = p.word()
    if p.peek():
        raise WordSyntaxError(f"unexpected {p.peek()!r}", p.pos)
    return w


_NAMES = {1: "x", -1: "x", 2: "y", -2: "y"}


def format_word(w: Word, fold: bool = False) -> str:
    if not w.letters:
        return "1"
    if not fold:
        return "".join(_NAMES[c] if c > 0 else _NAMES[c] + "^-1" for c in w.letters)
    out = []
    run_code, run = w.letters[0], 0
    for c in w.letters + (0,):
        if c == run_code:
            run += 1
            continue
        exp = run if run_code > 0 else -run
        out.append(_NAMES[run_code] if exp == 1 else f"{_NAMES[run_code]}^{exp}")
        run_code, run = c, 1
    return "".join(out)


# -- symmetries -------------------------------------------------------------

_SUBST = {
    Symmetry.SWAP_XY: {1: 2, -1: -2, 2: 1, -2: -1},
    Symmetry.INV_X: {1: -1, -1: 1, 2: 2, -2: -2},
    Symmetry.INV_Y: {1: 1, -1: -1, 2: -2, -2: 2},
}


def apply_symmetry(w: Word, sym: Symmetry) -> Word:
    table = _SUBST[sym]
    return Word._trusted(tuple(table[c] for c in w.letters))


def symmetry_orbit(w: Word) -> list[Word]:
    """All images of w under the group generated by the three involutions."""
    seen = {w: None}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for sym in Symmetry:
                v = apply_symmetry(u, sym)
                if v not in seen:
                    seen[v] = None
                    nxt.append(v)
        frontier = nxt
    return list(seen)


# -- word families ----------------------------------------------------------

def engel_word(m: int) -> Word:
    """e_1 = [y, x], e_m = [y, e_(m-1)]."""
    if m < 1:
        raise ValueError("Engel words are indexed from m = 1")
    e = commutator(Y, X)
    for _ in range(m - 1):
        e = commutator(Y, e)
    return e


def basic_commutator(i: int, j: int) -> Word:
    """[x, ..., x, y, ..., y, x] with i copies of x and j copies of y, left-nested."""
    if i < 0 or j < 1:
        raise ValueError("basic_commutator needs i >= 0 and j >= 1")
    e = engel_word(j)
    for _ in range(i):
        e = commutator(X, e)
    return e


def morse_words(m: int) -> tuple[Word, Word]:
    if m < 1:
        raise ValueError("Morse words are indexed from m = 1")
    u, v = X, Y
    for _ in range(m - 1):
        u, v = concat(u, v), concat(v, u)
    return u, v


def morse_identity(m: int) -> Word:
    u, v = morse_words(m)
    return concat(u, invert(v))


def named_relator_family(n: int) -> list[tuple[str, Word]]:
    """The five generic products of nth powers and all their symmetric images."""
    if n < 2:
        raise ValueError("relator families need n >= 2")
    c = commutator(X, Y)
    yn = power(Y, -n)
    base = [
        ("w", power(c, n)),
        ("u", concat(power(concat_all((c, Y, commutator(Y, X))), n), yn)),
        ("v", concat(power(concat_all((X, Y, invert(X))), n), yn)),
        ("t", concat_all((power(X, n), power(concat(invert(X), Y), n), yn))),
        ("t2", concat_all((power(X, 2 * n), power(concat(power(X, -2), Y), n), yn))),
    ]
    out: list[tuple[str, Word]] = []
    seen: set[Word] = set()
    for name, w in base:
        for k, img in enumerate(symmetry_orbit(w)):
            if img in seen:
                continue
            assert img.in_derived_subgroup(), name
            seen.add(img)
            out.append((name if k == 0 else f"{name}.{k}", img))
    return out


def relator_family(n: int) -> list[Word]:
    return [w for _, w in named_relator_family(n)]


def named_power_relators(n: int) -> list[tuple[str, Word]]:
    """Products of nth powers whose windings generate the whole relation ideal.

    With h = x^a y^b, every product of nth powers in F2' is, modulo F2'', a
    product of conjugates of (h [x,y])^n h^-n and h^n y^-nb x^-na.  Reading
    exponents mod n (1 - X^n and 1 - Y^n are themselves relators) leaves
    0 <= a, b < n.
    """
    if n < 2:
        raise ValueError("relator families need n >= 2")
    c = commutator(X, Y)
    out: list[tuple[str, Word]] = []
    for a in range(n):
        for b in range(n):
            h = xy_power(a, b)
            out.append((f"s{a},{b}", concat(power(concat(h, c), n), power(h, -n))))
            out.append((f"r{a},{b}", concat_all((power(h, n), power(Y, -n * b), power(X, -n * a)))))
    for _, w in out:
        assert w.in_derived_subgroup()
    return out


def random_word(rng: random.Random, length: int) -> Word:
    """A uniformly random freely reduced word of the given length."""
    out: list[int] = []
    choices = (1, -1, 2, -2)
    while len(out) < length:
        c = rng.choice(choices)
        if out and out[-1] == -c:
            continue
        out.append(c)
    return Word._trusted(tuple(out))


def random_nth_power_product(n: int, r: int, max_len: int, seed: int) -> Word:
    """u_1^n u_2^n ... u_r^n lying in the derived subgroup.

    The last base u_r is post-multiplied by x^-A y^-B so that the exponent
    sums of all bases cancel; the result is still a product of nth powers.
    """
    if r < 1:
        raise ValueError("need at least one power")
    rng = random.Random(seed)
    bases = [random_word(rng, rng.randint(0, max_len)) for _ in range(r)]
    a = b = 0
    for u in bases:
        da, db = exponent_sums(u)
        a += da
        b += db
    bases[-1] = concat(bases[-1], xy_power(-a, -b))
    return concat_all(power(u, n) for u in bases)


def random_derived_word(rng: random.Random, max_len: int) -> Word:
    """A random element of F2' of length at most max_len."""
    while True:
        w = random_word(rng, rng.randint(0, max_len))
        a, b = exponent_sums(w)
        w = concat(w, xy_power(-a, -b))
        if len(w) <= max_len:
            return w
