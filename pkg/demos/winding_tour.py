"""Parse a word, draw its curve and read off winding numbers and invariants."""

from pathlib import Path

from windlab import format_word, parse_word, winding_invariant, winding_oracle
from windlab.invariant import area, horizontal_spec, lambda_of_word, omega
from windlab.render import RenderConfig, write_svg

z = parse_word("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4")
print("word:    ", format_word(z, fold=True))

p = winding_invariant(z)
assert p == winding_oracle(z)
print("W(z):    ", p)
print("area:    ", area(z))

for i in range(2):
    print(f"h^{i}(z) mod 4:", lambda_of_word(horizontal_spec(i, 4), z))
print("Omega(z) at n = 4:", omega(z, 4).as_tuple())

out = Path(__file__).with_name("winding_tour.svg")
write_svg(z, out, RenderConfig(coloring=horizontal_spec(0, 4)))
print("picture: ", out)
