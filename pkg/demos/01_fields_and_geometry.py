"""
Small fields, projective points and the hyperbolic quadric
==========================================================

Run with ``python3 demos/01_fields_and_geometry.py``.
"""
import numpy as np

from polarsrg import projgeom as pg
from polarsrg.gf import field_new
from polarsrg.quadric import (SectionTag, enumerate_generators, form_eval, line_type,
                              perp, quadric_new, section_points, section_type)

# GF(4): codes 0, 1, w = 2, w + 1 = 3
F4 = field_new(4)
print("GF(4) multiplication table")
print(F4.mul_np)
print("w * w =", F4.mul(2, 2), " (that is w + 1)")

# points of PG(3, 3) are normalized vectors: first nonzero entry is 1
F3 = field_new(3)
pts = pg.enumerate_points(3, F3)
print("\nPG(3,3) has", len(pts), "points; theta(4,3) =", pg.theta(4, 3))
print("normalize (2,1,0) over GF(3) ->", pg.normalize((2, 1, 0), F3))

# Q+(7,2) with its distinguished generator spanned by the first four unit vectors
qc = quadric_new(3, 2)
print("\nQ+(7,2):", len(qc.points), "points,", len(enumerate_generators(qc)), "generators")

U = [tuple(int(i == j) for j in range(8)) for i in range(8)]
print("Q(U_0) =", form_eval(qc, U[0]), "  Q(U_0 + U_7) =", form_eval(qc, np.add(U[0], U[7]) % 2))
print("line U_0 U_7 is", line_type(qc, U[0], U[7]).value)
print("line U_0 U_1 is", line_type(qc, U[0], U[1]).value)

# the perp of a secant line is a 5-space carrying a Q+(5,2)
sec = pg.span([U[0], U[7]], qc.field)
p = perp(qc, sec)
print("\nperp of a secant line: dim", p.dim, "with", len(section_points(qc, p)), "quadric points,",
      section_type(qc, p).tag.value)

# four pairwise non-collinear points span a solid meeting the quadric in 5 points
coll = qc.collinear_bits
chosen, cand = [], (1 << len(qc.points)) - 1
while len(chosen) < 4:
    c = (cand & -cand).bit_length() - 1
    chosen.append(c)
    cand &= ~coll[c]
solid = pg.span([qc.points[c] for c in chosen], qc.field)
st = section_type(qc, solid)
print("solid through 4 non-collinear points:", st.point_count, "points,", st.tag.value)
assert st.tag is SectionTag.ELLIPTIC
