"""Gorenstein liaison of the Veronese surface in P^5.

A degree-0 section of the kernel of a linear 1 x 3 row, forced to vanish
on the Veronese surface V, cuts out a degree-5 Gorenstein surface X
containing V.  The residual (I_X : I_V) comes out as a plane, so V is
G-linked to a plane inside X.  Runs in under a second.
"""

from pathlib import Path

from brforge.io import read_ideal, read_matrix
from brforge.liaison import gorenstein_link
from brforge.ring import Rng

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

phi = read_matrix(str(FIXTURES / "linear_row_p5.mat"))
IV = read_ideal(str(FIXTURES / "veronese.id"))

rec = gorenstein_link(phi, IV, 0, Rng(5))

rep = rec.section_report
print(f"zero locus of the section: dim {rep.projective_dimension},"
      f" degree {rep.degree}, h-vector {rep.second_series}")
print(f"top-dimensional part X: degree {rec.gorenstein_report.degree},"
      f" h-vector {rec.gorenstein_report.second_series}")
print("generators of I_X:")
for g in rec.gorenstein.gens:
    print(f"  {g}")
print("Betti table of R/I_X:")
for line in rec.betti.lines():
    print(f"  {line}")
print(f"arithmetically Gorenstein: {rec.certificate.arithmetically_gorenstein}")
print(f"residual scheme (I_X : I_V): {[str(g) for g in rec.residual.gens]}")
print(f"residual degree: {rec.residual_report.degree}"
      f" (detaches a plane from the degree-5 surface)")
