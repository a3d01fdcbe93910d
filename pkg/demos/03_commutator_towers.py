"""Commutators of triangular maps dissolve the group layer by layer.

A single commutator kills the diagonal (the result is unitriangular).
Commutators of commutators additionally fix x1; one more level fixes x2;
after n+1 levels nothing is left.  That staircase of collapses is the
solvability of the triangular group, made executable.

Run:  python demos/03_commutator_towers.py
"""

from random import Random

from triaut import commutator, derived_depth_test, random_triangular

rng = Random(5)
n = 3

a = random_triangular(n, 2, rng=rng)
b = random_triangular(n, 2, rng=rng)
print("two random triangular maps of degree <= 2:")
print(a.to_text())
print(b.to_text())

c = commutator(a, b)
print("their commutator a b a^-1 b^-1 (unit diagonal appears):")
print(c.to_text())

print("sampling deeper commutator towers:")
for depth in range(1, n + 2):
    report = derived_depth_test(n, depth, trials=25, seed=100 + depth)
    print(f"  depth {depth}: {report.summary()}")

print(f"\nat depth {n + 1} only the identity survives: "
      "the triangular group in n variables is solvable of class <= n + 1.")
