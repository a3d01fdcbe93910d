"""Two order-two maps whose generated group is too big to be algebraic.

Take the linear involutions A = (-y1, y2 + a*y1) and B = (-y1, y2 + b*y1)
with a != b (2x2 matrices with determinant -1, written triangularly by
reversing the variables).  Each alone generates a group of order two.
Together, though, the alternating words (AB)^k pile up infinitely many
distinct unit shears y2 -> y2 + k(a-b)*y1: an infinite proper subgroup
of the one-dimensional shear group.  A connected one-dimensional group
has no such subgroup, so the generated group carries no algebraic
structure.  Connectedness of the factors is not a dispensable
hypothesis for finite generation results.

Run:  python demos/06_order_two_counterexample.py
"""

from triaut import compose, identity, nonconnected_counterexample, order_two_generator

a_map = order_two_generator(1)
b_map = order_two_generator(0)
print("A (a=1):")
print(a_map.to_text())
print("A*A == identity:", compose(a_map, a_map) == identity(2))

ab = compose(a_map, b_map)
print("\nAB is already an infinite-order shear:")
print(ab.to_text())

print("enumerating all reduced words up to length 12:")
report = nonconnected_counterexample(1, 0, 12)
for length, count in report.counts_by_even_length:
    print(f"  words of length <= {length:>2}: {count} distinct determinant-1 shears")
print("shear steps found:", report.translation_steps)
print("\nthe count grows forever with word length; contrast demo 02, where")
print("products of connected-degree-class generators stay in one bounded set.")
