"""Inflation/restriction between Kronecker quivers, GL_r twists and the functor F.

F sends a Kronecker module M to the kE_r-module on M_1 (+) M_2 where the
generator x_i acts through M(gamma_i) from M_1 to M_2 and by zero on M_2.
Its image consists of modules of Loewy length at most two, which is all an
:class:`ERModule` stores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import exactlin as el
from .exactlin import Field
from .quiver_rep import InvalidModuleError, IsoVerdict, KroneckerModule, is_isomorphic
from .rank_props import Mode, PropertyVerdict, survey
from .testfamily import Subspace, SubspaceOfModule

# -- inflation and restriction ------------------------------------------------


def inflate(M: KroneckerModule, s: int) -> KroneckerModule:
    """M as a module over Gamma_s: the arrows gamma_{r+1}..gamma_s act by zero."""
    if s <= M.r:
        raise ValueError(f"inflation needs s > r, got s={s}, r={M.r}")
    F = M.field
    extra = tuple(F.zeros(M.d2, M.d1) for _ in range(s - M.r))
    return KroneckerModule(F, s, M.d1, M.d2, M.maps + extra)


def restrict(N: KroneckerModule, r: int) -> KroneckerModule:
    """Pull back along Gamma_r -> Gamma_s: keep the first r arrows."""
    if not 2 <= r < N.r:
        raise ValueError(f"restriction needs 2 <= r < s, got r={r}, s={N.r}")
    return KroneckerModule(N.field, r, N.d1, N.d2, N.maps[:r])


def inflation_socle_witness(M: KroneckerModule, s: int, m: int) -> tuple[Subspace, Subspace]:
    """Subspaces U, V of k^s with dim Soc_U(inf M) != dim Soc_V(inf M).

    U spans m of the new coordinate vectors, so every x_u vanishes on inf M;
    V swaps one of them for e_i with M(gamma_i) != 0.
    """
    r = M.r
    if not 1 <= m <= s - r or m >= s:
        raise ValueError(f"need 1 <= m <= s - r, got m={m}, s-r={s - r}")
    nonzero = [i for i, a in enumerate(M.maps) if not el.is_zero(a)]
    if not nonzero:
        raise InvalidModuleError("all arrows of M act by zero; no witness exists")
    F = M.field
    U = Subspace.coordinate(F, s, range(r, r + m))
    V = Subspace.coordinate(F, s, [nonzero[0]] + list(range(r, r + m - 1)))
    return U, V


# -- GL_r twists --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GLMatrix:
    field: Field
    g: np.ndarray

    def __post_init__(self):
        g = self.field.array(self.g)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError("g must be square")
        if not el.is_invertible(self.field, g):
            raise ValueError("g is singular")
        g.setflags(write=False)
        object.__setattr__(self, "g", g)

    @property
    def r(self) -> int:
        return self.g.shape[0]

    def __matmul__(self, other: "GLMatrix") -> "GLMatrix":
        return GLMatrix(self.field, self.field.matmul(self.g, other.g))

    @classmethod
    def random(cls, field: Field, r: int, rng: np.random.Generator) -> "GLMatrix":
        while True:
            g = field.random((r, r), rng)
            if el.is_invertible(field, g):
                return cls(field, g)


def gl_twist(M: KroneckerModule, g: GLMatrix) -> KroneckerModule:
    """M^(g): arrow j acts as sum_i g_ij M(gamma_i).

    With this convention gl_twist(gl_twist(M, g), h) = gl_twist(M, g @ h).
    """
    if g.r != M.r or g.field != M.field:
        raise ValueError("twist matrix does not match the module")
    F = M.field
    maps = []
    for j in range(M.r):
        maps.append(M.x_alpha(g.g[:, j]))
    return KroneckerModule(F, M.r, M.d1, M.d2, tuple(maps))


@dataclass(frozen=True)
class TwistWitness:
    g: Optional[GLMatrix]
    attempts: int
    verdict: Optional[IsoVerdict]

    @property
    def found(self) -> bool:
        return self.g is not None


def find_twist_witness(M: KroneckerModule, attempts: int = 500, seed: int = 0) -> TwistWitness:
    """Search for g with M^(g) certified non-isomorphic to M."""
    rng = np.random.default_rng(seed)
    for k in range(1, attempts + 1):
        g = GLMatrix.random(M.field, M.r, rng)
        v = is_isomorphic(gl_twist(M, g), M, seed=seed)
        if v.status == "no":
            return TwistWitness(g, k, v)
    return TwistWitness(None, attempts, None)


# -- the functor F ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ERModule:
    """A kE_r-module of Loewy length <= 2: x_i maps top -> socle_part, kills socle_part."""

    field: Field
    r: int
    top: int
    socle_part: int
    actions: tuple

    def __post_init__(self):
        if not self.field.is_finite:
            raise ValueError("kE_r needs a field of positive characteristic")
        acts = tuple(self.field.array(a).reshape(self.socle_part, self.top) for a in self.actions)
        if len(acts) != self.r:
            raise ValueError(f"expected {self.r} actions, got {len(acts)}")
        object.__setattr__(self, "actions", acts)

    @property
    def dim(self) -> int:
        return self.top + self.socle_part

    def action(self, i: int) -> np.ndarray:
        """x_i on the whole space as a square matrix."""
        F = self.field
        out = F.zeros(self.dim, self.dim)
        out[self.top:, : self.top] = self.actions[i]
        return out

    def element_action(self, u) -> np.ndarray:
        """The action of u = sum_i u_i x_i."""
        F = self.field
        out = F.zeros(self.dim, self.dim)
        for i, c in enumerate(u):
            if c != 0:
                out = F.reduce(out + c * self.action(i))
        return out


def to_elementary_abelian(M: KroneckerModule, p: Optional[int] = None) -> ERModule:
    if not M.field.is_finite:
        raise ValueError("F needs a field of positive characteristic")
    if p is not None and p != M.field.p:
        raise ValueError(f"module lives in characteristic {M.field.p}, not {p}")
    return ERModule(M.field, M.r, M.d1, M.d2, M.maps)


def er_soc(N: ERModule, U: Subspace) -> SubspaceOfModule:
    """{m : u.m = 0 for all u in U}, from the full action matrices."""
    if U.r != N.r or U.field != N.field:
        raise ValueError("subspace and module do not match")
    if N.dim == 0:
        return SubspaceOfModule(0, N.field.zeros(0, 0))
    A = np.vstack([N.element_action(u) for u in U.basis])
    B = el.column_basis(N.field, el.kernel(N.field, A))
    return SubspaceOfModule(B.shape[1], B)


def er_rad(N: ERModule, U: Subspace) -> SubspaceOfModule:
    """sum_{u in U} u.N."""
    if U.r != N.r or U.field != N.field:
        raise ValueError("subspace and module do not match")
    if N.dim == 0:
        return SubspaceOfModule(0, N.field.zeros(0, 0))
    A = np.hstack([N.element_action(u) for u in U.basis])
    B = el.column_basis(N.field, A)
    return SubspaceOfModule(B.shape[1], B)


def er_constant_soc(N: ERModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    points, scope = survey(N.field, d, N.r, mode)
    dims = [(er_soc(N, U).dim, U) for U in points]
    lo, hi = min(dims, key=lambda t: t[0]), max(dims, key=lambda t: t[0])
    if lo[0] == hi[0]:
        return PropertyVerdict("csr", d, True, scope, detail=f"dim Soc_U = {lo[0]} throughout")
    return PropertyVerdict("csr", d, False, scope, (lo[1], hi[1]), detail=f"dim Soc_U {lo[0]} vs {hi[0]}")


def er_equal_soc(N: ERModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    """Equal d-Soc property: Soc_U(N) is the same subspace for every surveyed U."""
    points, scope = survey(N.field, d, N.r, mode)
    first = None
    for U in points:
        B = er_soc(N, U).basis
        if first is None:
            first = (U, B)
        elif not np.array_equal(B, first[1]):
            return PropertyVerdict("esp", d, False, scope, (first[0], U), detail="socles differ")
    return PropertyVerdict("esp", d, True, scope, detail="one socle for every surveyed U")


def er_equal_rad(N: ERModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    points, scope = survey(N.field, d, N.r, mode)
    first = None
    for U in points:
        B = er_rad(N, U).basis
        if first is None:
            first = (U, B)
        elif not np.array_equal(B, first[1]):
            return PropertyVerdict("erp", d, False, scope, (first[0], U), detail="radicals differ")
    return PropertyVerdict("erp", d, True, scope, detail="one radical for every surveyed U")

