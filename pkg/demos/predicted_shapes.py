"""Predicted invariants from twist data alone: no Groebner step anywhere.

For a map of decomposable sheaves with source twists a_i and target
twists b_j, the Chern series of the kernel predicts the degree of the
zero locus of a regular section, and a mapping-cone count predicts the
whole minimal free resolution.  This script prints both for three
instances, plus the closed codimension-3 degree formula against the
series expansion.  Instant.
"""

from brforge.chern import (
    TwistSpec,
    chern_coefficients,
    degree_formula_r3,
    expected_resolution,
)
from brforge.ring import Rng


def show(label: str, spec: TwistSpec) -> None:
    chern = chern_coefficients(spec)
    shape = expected_resolution(spec)
    print(f"{label}: a={spec.a} b={spec.b} on P^{spec.n}")
    print(f"  c = {chern.coefficients}")
    print(f"  expected degree (c_{chern.r}) = {chern.expected_degree}")
    print("  expected resolution:")
    for line in shape.lines():
        print(f"    {line}")


# quadric entries on P^6, rank-5 kernel: the degree-21 threefold
show("linear section bundle", TwistSpec((2,) * 6, (3,), 6))

# cubic entries on P^6, rank-3 kernel: the degree-13 threefold
show("quadratic entries", TwistSpec((3,) * 4, (5,), 6))

# the sextic-section surface: degree 54 from the closed formula
print(f"sextic section on P^5: degree_formula_r3 = {degree_formula_r3([6] * 5, [9, 9])}")

# the closed form is the w^3 series coefficient for every target rank
rng = Rng(7)
checked = 0
for _ in range(500):
    t = 1 + rng.below(4)
    a = tuple(1 + rng.below(9) for _ in range(t + 3))
    b = tuple(1 + rng.below(9) for _ in range(t))
    assert degree_formula_r3(a, b) == chern_coefficients(TwistSpec(a, b, 6)).coefficients[3]
    checked += 1
print(f"closed formula vs series expansion: {checked} random specs agree")
