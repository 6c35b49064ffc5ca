"""Projectives, injectives and the Grassmannian-indexed test modules X_U.

For a d-dimensional subspace U of k^r (1 <= d < r), X_U is the cokernel of
the embedding P_1^d -> P_2 determined by a basis of U: one-dimensional at
vertex 1, k^r / U at vertex 2, with gamma_i sending the generator to the
class of the i-th unit vector.  Soc_U and Rad_U are the intersection of the
kernels and the sum of the images of the operators x_u, u in U.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactlin as el
from .exactlin import Field
from .quiver_rep import InvalidModuleError, KroneckerModule, Morphism, direct_sum, dual, is_indecomposable


class SubspaceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Subspace:
    """A point of Gr_{d,r}, stored by its reduced row echelon basis (d x r)."""

    field: Field
    basis: np.ndarray

    def __post_init__(self):
        B = self.field.array(self.basis)
        if B.ndim != 2:
            raise SubspaceError("basis must be a d x r matrix")
        R, piv = el.rref(self.field, B)
        if len(piv) != B.shape[0]:
            raise SubspaceError("basis rows are linearly dependent")
        if not np.array_equal(R, B):
            raise SubspaceError("basis is not in reduced row echelon form; use Subspace.span")
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @classmethod
    def span(cls, field: Field, vectors) -> "Subspace":
        """Subspace spanned by the given row vectors (dependent rows are dropped)."""
        A = field.array(vectors)
        if A.ndim == 1:
            A = A.reshape(1, -1)
        R, piv = el.rref(field, A)
        return cls(field, R[: len(piv)].copy())

    @classmethod
    def coordinate(cls, field: Field, r: int, indices) -> "Subspace":
        """span{e_i : i in indices} (0-based)."""
        eye = field.eye(r)
        return cls.span(field, eye[sorted(indices)])

    @property
    def d(self) -> int:
        return self.basis.shape[0]

    @property
    def r(self) -> int:
        return self.basis.shape[1]

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row != 0)[0]) for row in self.basis]

    def key(self) -> tuple:
        """Sort key: pivot set, then entries."""
        return (tuple(self.pivots), tuple(int(x) if self.field.p else x for x in self.basis.reshape(-1)))

    def vectors(self) -> list[np.ndarray]:
        return [row.copy() for row in self.basis]

    def contains(self, v) -> bool:
        v = self.field.array(v).reshape(1, -1)
        return el.rank(self.field, np.vstack([self.basis, v])) == self.d

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.field, self.basis.shape, tuple(self.basis.reshape(-1).tolist())))

    def __repr__(self):
        rows = ";".join(",".join(str(x) for x in row) for row in self.basis)
        return f"Subspace({self.field}, [{rows}])"

    def to_lists(self) -> list[list]:
        return [[int(x) if self.field.p else str(x) for x in row] for row in self.basis]


# -- projectives and injectives ----------------------------------------------


def projective(field: Field, r: int, i: int) -> KroneckerModule:
    """P_1 = (0, k) (simple projective) or P_2 = (k, k^r) with gamma_j -> e_j."""
    if i == 1:
        return KroneckerModule(field, r, 0, 1, tuple(field.zeros(1, 0) for _ in range(r)))
    if i == 2:
        eye = field.eye(r)
        return KroneckerModule(field, r, 1, r, tuple(eye[:, [j]].copy() for j in range(r)))
    raise ValueError(f"projective index must be 1 or 2, got {i}")


def injective(field: Field, r: int, i: int) -> KroneckerModule:
    """I_i = D(P_i): I_1 = (k, 0) is the simple injective, I_2 has dimension (r, 1)."""
    return dual(projective(field, r, i))


def simple(field: Field, r: int, vertex: int) -> KroneckerModule:
    return projective(field, r, 1) if vertex == 2 else injective(field, r, 1)


# -- the test family ----------------------------------------------------------


@dataclass(frozen=True)
class TestModule:
    __test__ = False  # not a pytest class

    subspace: Subspace
    module: KroneckerModule


def _check_subspace(U: Subspace) -> None:
    if not 1 <= U.d < U.r:
        raise SubspaceError(f"need 1 <= d < r, got d={U.d}, r={U.r}")
    if U.r < 2:
        raise SubspaceError("r must be at least 2")


def x_u_module(U: Subspace) -> TestModule:
    """X_U = P_2 / im(T-bar), coordinatized on the non-pivot columns of U's basis."""
    _check_subspace(U)
    F, r = U.field, U.r
    piv = U.pivots
    nonpiv = [c for c in range(r) if c not in piv]
    maps = []
    for i in range(r):
        col = F.zeros(len(nonpiv), 1)
        if i in piv:
            row = U.basis[piv.index(i)]
            col[:, 0] = F.reduce(-row[nonpiv]) if F.p else -row[nonpiv]
        else:
            col[nonpiv.index(i), 0] = 1
        maps.append(col)
    return TestModule(U, KroneckerModule(F, r, 1, r - U.d, tuple(maps)))


def t_bar(field: Field, r: int, T) -> Morphism:
    """The map P_1^d -> P_2 sending the j-th generator to x_{alpha_j}."""
    T = field.array(T).reshape(-1, r)
    P1, P2 = projective(field, r, 1), projective(field, r, 2)
    src = direct_sum(*[P1] * T.shape[0]) if T.shape[0] else KroneckerModule.zero(field, r)
    return Morphism(src, P2, field.zeros(1, 0), T.T.copy())


def recover_subspace(M: KroneckerModule, verify: bool = True) -> Subspace:
    """The U with X_U ~= M for an indecomposable M of dimension vector (1, r-d).

    Maps P_2 onto M via a generator of M_1; the kernel at vertex 2 is U.
    """
    r = M.r
    if M.d1 != 1 or not 1 <= M.d2 <= r - 1:
        if M.d1 == 1 and M.d2 == 0:
            raise SubspaceError("dimension (1,0) is the simple injective (d = r is excluded)")
        raise SubspaceError(f"dimension vector {tuple(M.dim)} is not of the form (1, r-d), 1 <= d < r")
    F = M.field
    pi2 = np.hstack([m[:, [0]] for m in M.maps])  # column i = gamma_i . generator
    rk, K = el.rank_and_kernel(F, pi2)
    if rk < M.d2:
        raise InvalidModuleError("module is decomposable (a copy of P_1 splits off)")
    U = Subspace.span(F, K.T)
    if verify:
        from .quiver_rep import is_isomorphic

        verdict = is_isomorphic(x_u_module(U).module, M)
        if verdict.status != "yes":
            raise AssertionError(f"round trip failed: {verdict.reason}")
    return U


# -- x_T / y_T and Soc_U / Rad_U ----------------------------------------------


def x_alpha_operator(M: KroneckerModule, alpha) -> np.ndarray:
    """x_alpha on M = M_1 (+) M_2 as a square block matrix."""
    F = M.field
    n = M.total_dim
    out = F.zeros(n, n)
    out[M.d1:, : M.d1] = M.x_alpha(F.array(alpha))
    return out


def _as_tuple(M: KroneckerModule, T) -> np.ndarray:
    T = M.field.array(T)
    if T.ndim == 1:
        T = T.reshape(1, -1)
    if T.shape[1] != M.r:
        raise ValueError(f"vectors must lie in k^{M.r}, got length {T.shape[1]}")
    return T


def x_t_operator(M: KroneckerModule, T) -> np.ndarray:
    """x_T: M -> M^d, the stacked operators x_{alpha_j}; shape (d n) x n."""
    T = _as_tuple(M, T)
    if T.shape[0] == 0:
        return M.field.zeros(0, M.total_dim)
    return np.vstack([x_alpha_operator(M, a) for a in T])


def y_t_operator(M: KroneckerModule, T) -> np.ndarray:
    """y_T: M^d -> M, (m_1..m_d) -> sum_j x_{alpha_j}(m_j); shape n x (d n)."""
    T = _as_tuple(M, T)
    if T.shape[0] == 0:
        return M.field.zeros(M.total_dim, 0)
    return np.hstack([x_alpha_operator(M, a) for a in T])


def _stacked(M: KroneckerModule, U: Subspace) -> np.ndarray:
    if U.r != M.r or U.field != M.field:
        raise ValueError("subspace and module live over different k^r")
    return np.vstack([M.x_alpha(u) for u in U.basis])


@dataclass(frozen=True)
class SubspaceOfModule:
    dim: int
    basis: np.ndarray  # canonical column basis inside M_1 (+) M_2


def soc(M: KroneckerModule, U: Subspace) -> SubspaceOfModule:
    """Soc_U(M) = intersection of ker x_u over a basis of U (always contains M_2)."""
    F = M.field
    if M.d1:
        K1 = el.kernel(F, _stacked(M, U)) if M.d2 else F.eye(M.d1)
    else:
        K1 = F.zeros(0, 0)
    n = M.total_dim
    B = F.zeros(n, K1.shape[1] + M.d2)
    B[: M.d1, : K1.shape[1]] = K1
    B[M.d1:, K1.shape[1]:] = F.eye(M.d2)
    B = el.column_basis(F, B)
    return SubspaceOfModule(B.shape[1], B)


def soc_dim(M: KroneckerModule, U: Subspace) -> int:
    if M.d1 == 0 or M.d2 == 0:
        return M.total_dim
    return M.total_dim - el.rank(M.field, _stacked(M, U))


def rad(M: KroneckerModule, U: Subspace) -> SubspaceOfModule:
    """Rad_U(M) = sum of the images x_u(M) over a basis of U (inside M_2)."""
    F = M.field
    if U.r != M.r:
        raise ValueError("subspace and module live over different k^r")
    n = M.total_dim
    imgs = F.zeros(M.d2, 0) if M.d1 == 0 else np.hstack([M.x_alpha(u) for u in U.basis])
    img = el.column_basis(F, imgs)
    B = F.zeros(n, img.shape[1])
    B[M.d1:, :] = img
    return SubspaceOfModule(B.shape[1], B)


def rad_dim(M: KroneckerModule, U: Subspace) -> int:
    if M.d1 == 0 or M.d2 == 0:
        return 0
    return el.rank(M.field, np.hstack([M.x_alpha(u) for u in U.basis]))


def top_kernel(M: KroneckerModule) -> np.ndarray:
    """Common kernel of all arrows inside M_1 (nonzero iff M has a simple injective summand)."""
    F = M.field
    if M.d1 == 0:
        return F.zeros(0, 0)
    if M.d2 == 0:
        return F.eye(M.d1)
    return el.kernel(F, np.vstack(M.maps))


def is_simple(M: KroneckerModule) -> bool:
    return M.total_dim == 1


def is_test_module_indecomposable(T: TestModule) -> bool:
    return is_indecomposable(T.module).status == "indecomposable"


def ringel_e(field: Field) -> KroneckerModule:
    """Ringel's brick E over Gamma_3: gamma_1 = id, gamma_2(a,b) = (b,0), gamma_3(a,b) = (0,a)."""
    return KroneckerModule.from_maps(field, [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]])
