"""Relation lattices on the torus window and closed-form order bounds."""

from windlab.invariant import m24_is_trivial
from windlab.quotient import closed_form_bounds, complete_lattice, family_lattice, m24_word_problem_nf, quotient_order
from windlab.word import parse_word, random_nth_power_product

for n in (2, 4):
    q = quotient_order(complete_lattice(n))
    print(f"n = {n}: |M(2,{n})'| = {q.order}, divisors {q.elementary_divisors}")

lat = family_lattice(4)
for text in ["(xy)^4", "[x,y]^2", "x^4 [x,y] x^-4 [x,y]^-1"]:
    w = parse_word(text)
    print(f"{text:28s} invariant: {m24_is_trivial(w)!s:5s}  normal form: {m24_word_problem_nf(w, lat)}")
z = random_nth_power_product(4, 4, 6, seed=7)
print("random product of 4th powers trivial:", m24_word_problem_nf(z, lat))

for b in closed_form_bounds(2, 8):
    print(f"{b.name:18s}", b.value.bit_length() - 1 if b.value else b.note or "n/a")
