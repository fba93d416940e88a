"""Max-cut of circulants C_n^{1..r}: exact values against spectral bounds."""

import math

import numpy as np

from outerkplanar import (
    CirculantSpec,
    adjacency_eigenvalues,
    cut_value,
    dirichlet_kernel,
    exact_maxcut,
    lemma_maxcut_bound,
    mohar_bound,
    xor_sum,
)

# the whole spectrum comes from the Dirichlet kernel, no solver needed
spec = CirculantSpec(12, 2)
lam = adjacency_eigenvalues(spec)
print(f"C_12^(1..2) adjacency eigenvalues (via D_r):")
print(" ", np.round(np.sort(lam), 6))

# exact max cut vs the spectral ceiling, small grid
print("\n n  r   exact  mohar    lemma")
for r in (1, 2, 3):
    for n in range(2 * r + 2, 15, 2):
        s = CirculantSpec(n, r)
        cut = exact_maxcut(s)
        print(f"{n:>3} {r:>2}  {cut.value:>5}  {mohar_bound(s):>6.2f} "
              f"{lemma_maxcut_bound(s):>8.1f}")

# mohar is tight on even cycles, and again at (12, 2)
cut = exact_maxcut(CirculantSpec(12, 2))
print(f"\nexact_maxcut(12, 2) = {cut.value} = mohar "
      f"{mohar_bound(CirculantSpec(12, 2)):.1f}; witness sides {cut.sides}")

# the xor double sum of a bit string is twice the cut it induces
bits = "001101011100"
s = CirculantSpec(len(bits), 3)
sides = [int(b) for b in bits]
print(f"\nbits={bits}: xor_sum={xor_sum(bits, 3)} "
      f"= 2*cut={2 * cut_value(s, sides)}")

# the kernel minimum controls the smallest eigenvalue
grid = np.linspace(0, 2 * math.pi, 2001)
for r in (2, 5, 20):
    print(f"min D_{r} on a grid: {dirichlet_kernel(r, grid).min():.4f}")
