"""Auslander-Reiten translates, Ext via presentations, and a self-extension tower."""

from kronrep import Field
from kronrep import ar
from kronrep.forms import euler_form
from kronrep.quiver_rep import end_dim, hom_dim, is_indecomposable
from kronrep.rank_props import orthogonality_flags
from kronrep.testfamily import projective, ringel_e

F = Field.prime(3)
E = ringel_e(F)

M = projective(F, 3, 1)
for k in range(4):
    print(f"tau^-{k} P_1 has dimension vector {tuple(M.dim)}")
    M = ar.tau_inv(M).translate

print("tau E:", tuple(ar.tau(E).translate.dim), " tau^-1 E:", tuple(ar.tau_inv(E).translate.dim))
h, e = hom_dim(E, E), ar.ext_dim(E, E)
print(f"Hom(E, E) = {h}, Ext(E, E) = {e}, Euler form = {euler_form(3, E.dim, E.dim)}")

tower = ar.self_extension_tower(E, 3, seed=0)
for T in tower:
    flags = orthogonality_flags(T, 2)
    print(f"tower member {tuple(T.dim)}: End = {end_dim(T)}, {is_indecomposable(T).status}, "
          f"orthogonal (right, left) = ({flags.right}, {flags.left})")

scan = ar.cone_scan(E, -2, 2)
for row in scan.rows:
    print(f"  j = {row.j:+d}  dim {tuple(row.dim)}  esp {row.esp}  erp {row.erp}")
