"""Triangular derivations integrate to polynomial flows.

A triangular derivation D is locally nilpotent: applying it repeatedly
kills every polynomial.  So the exponential series sum s^k D^k / k! is a
finite sum of exact rationals, and exp(sD) is a genuine unitriangular
automorphism satisfying the one-parameter group law on the nose.

Run:  python demos/04_flows_and_exponentials.py
"""

from fractions import Fraction

from triaut import (
    Polynomial,
    bracket,
    compose,
    exponential,
    make_derivation,
    nilpotency_index,
    unipotent_generation_test,
)

x1 = Polynomial.variable(1, 3)
x2 = Polynomial.variable(2, 3)

d = make_derivation(3, [1, x1 ** 2, x1 * x2])
print("the derivation D = d/dx1 + x1^2 d/dx2 + x1*x2 d/dx3")
print("nilpotency index on x3:", nilpotency_index(d, Polynomial.variable(3, 3)))

flow = exponential(d, Fraction(1, 2))
print("\nexp(D/2), a unitriangular automorphism with exact coefficients:")
print(flow.to_text())

s, t = Fraction(2, 3), Fraction(-1, 4)
assert compose(exponential(d, s), exponential(d, t)) == exponential(d, s + t)
print(f"one-parameter law verified exactly at s={s}, t={t}")

e = make_derivation(3, [0, 0, x2 ** 2])
print("\nbracket with E = x2^2 d/dx3:")
print(bracket(d, e).to_text())

report = unipotent_generation_test([d, e], max_word_len=6, trials=200, seed=9)
print(report.summary())
print("every product of exponentials keeps eigenvalue 1 on each coordinate:")
print("the generated group is unipotent.")
