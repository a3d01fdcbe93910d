"""Degrees of triangular automorphisms grow under composition, but only so far.

The shear tower (x1, x2 + x1^2, x3 + x2^2) has degree 2, yet its square
already has degree 4.  Iterating further never escapes degree m^(n-1) = 4:
that ceiling is the content of the degree bound checked by the fuzz
harness (see demo 02).

Run:  python demos/01_degree_growth.py
"""

from triaut import compose, identity, invert, power, staircase_map

phi = staircase_map(3, 2)
print("the degree-2 shear tower:")
print(phi.to_text())

square = compose(phi, phi)
print("its square (degree jumps to 4):")
print(square.to_text())

print("degrees of phi^k for k = 1..8 (the ceiling is 2^(3-1) = 4):")
for k in range(1, 9):
    print(f"  deg(phi^{k}) = {power(phi, k).degree()}")

inverse = invert(phi)
print("\nthe inverse, found by back-substitution:")
print(inverse.to_text())
print("check: phi o phi^-1 == identity:",
      compose(phi, inverse) == identity(3))
