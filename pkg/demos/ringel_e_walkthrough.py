"""Ringel's module E over F_5: socle dimensions along the Grassmannians of k^3.

Run with ``python3 demos/ringel_e_walkthrough.py``.
"""

from kronrep import Field
from kronrep import rank_props as rp
from kronrep.quiver_rep import hom_dim
from kronrep.testfamily import Subspace, ringel_e, x_u_module

F = Field.prime(5)
E = ringel_e(F)
print("E has dimension vector", tuple(E.dim), "over F_5 with r =", E.r)

V = Subspace.span(F, [[1, 0, 0]])
W = Subspace.span(F, [[0, 1, 0]])
for name, U in (("V", V), ("W", W)):
    X = x_u_module(U).module
    print(f"  {name}: dim Soc_U(E) = {rp.soc_dim(E, U)}, dim Hom(X_U, E) = {hom_dim(X, E)}")

for d in (1, 2):
    prof = rp.socle_rank_profile(E, d)
    print(f"d = {d}: {len(prof.observations)} points, socle dimension in [{prof.min_soc}, {prof.max_soc}]")
    for prop in ("csr", "esp"):
        v = rp.check_property(prop, E, d)
        print(f"    {prop}: {v.status} ({v.scope})")

print("stratum of E:", rp.stratum(E))
