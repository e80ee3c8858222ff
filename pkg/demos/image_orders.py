"""Orders of invariant images and the lower bounds they give."""

from windlab.subgroup import (
    cotainf_image_order,
    factor_power,
    omega_bar_image_order,
    omega_image_order,
    omega_tilde_image_order,
    restricted_burnside_bound,
)

for n in (4, 8, 16):
    print(f"n = {n:2d}: |Im Omega| = {factor_power(omega_image_order(n))}, "
          f"|Im Omega-bar| = {factor_power(omega_bar_image_order(n))}")
print("|Im Omega-tilde| =", factor_power(omega_tilde_image_order()))
for n in (8, 16):
    print(f"lower-bound family image at n = {n}: {factor_power(cotainf_image_order(n))}")

b = restricted_burnside_bound(strict=False)
print(f"conjugate tuples generate {factor_power(b.subgroup_order)}; bound 2^{b.total_exponent}")
