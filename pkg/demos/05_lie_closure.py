"""Bracket-closing a few triangular derivations always stops, nilpotently.

Starting from d/dx1 and x1 d/dx2, one bracket produces d/dx2 and then
everything commutes: the Heisenberg algebra, dimension 3, nilpotency
class 2.  The closure loop does exact rational row reduction over a
monomial frame that grows only as new coefficient monomials appear.

Run:  python demos/05_lie_closure.py
"""

from random import Random

from triaut import (
    Polynomial,
    closure_report,
    lie_closure,
    lower_central_series,
    make_derivation,
    random_triangular_derivation,
)

x1 = Polynomial.variable(1, 2)

heisenberg = [make_derivation(2, [1, 0]), make_derivation(2, [0, x1])]
report = closure_report(lie_closure(heisenberg))
print("closure of {d/dx1, x1 d/dx2}:")
print("  dimension:", report["dimension"])
print("  lower central series:", report["lower_central_series"])
print("  derived series:", report["derived_series"])
print("  nilpotency class:", report["nilpotency_class"])
print("  basis:")
for text in report["basis"]:
    print("    " + " / ".join(text.strip().splitlines()))

print("\nquadratic coefficients make it climb higher but never forever:")
quad = [make_derivation(2, [1, 0]), make_derivation(2, [0, x1 ** 2])]
print("  closure of {d/dx1, x1^2 d/dx2} has dimension",
      lie_closure(quad).dimension)

rng = Random(31)
print("\nrandom generator sets (n <= 4, coefficient degree <= 2):")
for trial in range(6):
    n = rng.randint(2, 4)
    gens = [random_triangular_derivation(n, 2, rng=rng, density=0.3)
            for _ in range(rng.randint(2, 3))]
    basis = lie_closure(gens)
    print(f"  n={n}, {len(gens)} generators -> dimension {basis.dimension:>3}, "
          f"lower central series {lower_central_series(basis)}")
