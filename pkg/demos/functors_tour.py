"""Inflation, GL_3 twists and the passage to radical-square-zero kE_3-modules."""

from kronrep import Field
from kronrep import functors as fn
from kronrep.rank_props import has_constant_socle_rank, has_equal_socle_property
from kronrep.testfamily import Subspace, projective, ringel_e, soc_dim

F = Field.prime(5)
E = ringel_e(F)

N = fn.inflate(E, 4)
U, V = fn.inflation_socle_witness(E, 4, 1)
print("inflating E to 4 arrows: socles", soc_dim(N, U), "and", soc_dim(N, V),
      "so constant 1-socle rank fails:", has_constant_socle_rank(N, 1).status)

X = fn.inflate(projective(F, 3, 2), 4)
v = has_equal_socle_property(X, 1)
print("inf P_2 is the test module for the new coordinate line, so its equal 1-socle property is", v.status,
      "with witness", [U.to_lists() for U in v.witness])

wit = fn.find_twist_witness(E, attempts=50)
print("twist witness for E found after", wit.attempts, "attempt(s); E^(g) and E isomorphic:", wit.verdict.status)

R = fn.to_elementary_abelian(E)
for d in (1, 2):
    print(f"F(E): equal {d}-socle {fn.er_equal_soc(R, d).status}, "
          f"module side {has_equal_socle_property(E, d).status}")
W = Subspace.span(F, [[0, 1, 0]])
print("Soc_W of F(E) has dimension", fn.er_soc(R, W).dim)
