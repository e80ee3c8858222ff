"""Engel and Morse words: where the Omega invariants stop seeing them."""

from math import comb

from windlab.invariant import basiccom_report, engel_gamma_report, engel_poly, morse_report

for n in (4, 8, 16):
    r = engel_gamma_report(n)
    print(f"n = {n:2d}: Omega(e_j) first vanishes at j = {r.first_vanishing}")

print("W(e_5) =", engel_poly(5))

for k in (2, 3, 4):
    r = morse_report(k)
    print(f"n = {r.n:2d}: Morse word at m = {r.satisfied_at} divisible: {r.divisible}, "
          f"h0 - h1 at m = {r.violated_at}: {r.h0_minus_h1}")

r = basiccom_report(8)
print("diagonal invariant of e_{i, 9-i}:", r.values, "expected", r.expected)
print("C(2^k, 2^(k-1)) mod 8:", [comb(2 ** k, 2 ** (k - 1)) % 8 for k in range(2, 9)])
