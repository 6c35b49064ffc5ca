"""Representations of the r-Kronecker quiver and their morphisms.

A representation has a space at vertex 1 (dimension ``d1``), a space at
vertex 2 (dimension ``d2``) and ``r`` linear maps ``M(gamma_i): k^d1 -> k^d2``
stored as ``d2 x d1`` matrices.  A morphism ``f: M -> N`` is a pair
``(f1, f2)`` with ``N(gamma_i) @ f1 == f2 @ M(gamma_i)`` for every arrow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import exactlin as el
from .exactlin import Field


class InvalidModuleError(ValueError):
    """Raised when representation data violates an invariant."""


class DimVector(NamedTuple):
    d1: int
    d2: int

    def __add__(self, other):  # componentwise, not tuple concatenation
        return DimVector(self.d1 + other[0], self.d2 + other[1])

    def __sub__(self, other):
        return DimVector(self.d1 - other[0], self.d2 - other[1])

    def __mul__(self, k):
        return DimVector(self.d1 * k, self.d2 * k)

    __rmul__ = __mul__


def validate(field: Field, r: int, dim: Sequence[int], maps: Sequence[np.ndarray]) -> Optional[str]:
    """First violated invariant of raw representation data, or ``None``."""
    if not isinstance(field, Field):
        return "field: not a Field"
    if int(r) != r or r < 2:
        return f"r: need r >= 2, got {r}"
    d1, d2 = dim
    if d1 < 0 or d2 < 0:
        return f"dim: negative entry in {tuple(dim)}"
    if len(maps) != r:
        return f"maps: expected {r} maps, got {len(maps)}"
    for i, a in enumerate(maps):
        a = np.asarray(a)
        if a.shape != (d2, d1):
            return f"maps[{i}]: shape {a.shape}, expected {(d2, d1)}"
        if field.p is not None and a.size and (np.any(a < 0) or np.any(a >= field.p)):
            return f"maps[{i}]: entries not reduced mod {field.p}"
    return None


@dataclass(frozen=True, eq=False)
class KroneckerModule:
    field: Field
    r: int
    d1: int
    d2: int
    maps: tuple

    def __post_init__(self):
        maps = tuple(self.field.array(m).reshape(self.d2, self.d1) if np.asarray(m).size == self.d1 * self.d2
                     else np.asarray(m) for m in self.maps)
        problem = validate(self.field, self.r, (self.d1, self.d2), maps)
        if problem:
            raise InvalidModuleError(problem)
        for m in maps:
            m.setflags(write=False)
        object.__setattr__(self, "maps", maps)

    @classmethod
    def from_maps(cls, field: Field, maps, dim=None) -> "KroneckerModule":
        maps = [field.array(m) for m in maps]
        if dim is None:
            if not maps:
                raise InvalidModuleError("maps: cannot infer dimensions from no maps")
            dim = maps[0].shape[::-1]
        d1, d2 = dim
        return cls(field, len(maps), d1, d2, tuple(maps))

    @classmethod
    def zero(cls, field: Field, r: int) -> "KroneckerModule":
        return cls(field, r, 0, 0, tuple(field.zeros(0, 0) for _ in range(r)))

    @property
    def dim(self) -> DimVector:
        return DimVector(self.d1, self.d2)

    @property
    def total_dim(self) -> int:
        return self.d1 + self.d2

    def is_zero(self) -> bool:
        return self.d1 == 0 and self.d2 == 0

    def x_alpha(self, alpha) -> np.ndarray:
        """The map ``sum_i alpha_i M(gamma_i)`` from vertex 1 to vertex 2."""
        out = self.field.zeros(self.d2, self.d1)
        for a, m in zip(alpha, self.maps):
            if a != 0:
                out = self.field.reduce(out + a * m)
        return out

    def radical_matrix(self) -> np.ndarray:
        """``[M(gamma_1)|...|M(gamma_r)]``: the map ``M_1^r -> M_2``."""
        if self.d1 == 0:
            return self.field.zeros(self.d2, 0)
        return np.hstack(self.maps)

    def same_category(self, other: "KroneckerModule") -> None:
        if self.field != other.field:
            raise InvalidModuleError(f"field mismatch: {self.field} vs {other.field}")
        if self.r != other.r:
            raise InvalidModuleError(f"r mismatch: {self.r} vs {other.r}")

    def __eq__(self, other):
        if not isinstance(other, KroneckerModule):
            return NotImplemented
        return (self.field == other.field and self.r == other.r and self.dim == other.dim
                and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps)))

    def __hash__(self):
        return hash((self.field, self.r, self.dim, tuple(tuple(m.reshape(-1).tolist()) for m in self.maps)))

    def __repr__(self):
        return f"KroneckerModule({self.field}, r={self.r}, dim={tuple(self.dim)})"


@dataclass(frozen=True, eq=False)
class Morphism:
    source: KroneckerModule
    target: KroneckerModule
    f1: np.ndarray
    f2: np.ndarray
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        F = self.source.field
        self.source.same_category(self.target)
        f1 = F.array(self.f1).reshape(self.target.d1, self.source.d1)
        f2 = F.array(self.f2).reshape(self.target.d2, self.source.d2)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)
        if self.check and not self.commutes():
            raise InvalidModuleError("morphism: a commuting square fails")

    @property
    def field(self) -> Field:
        return self.source.field

    def commutes(self) -> bool:
        F = self.field
        for a, b in zip(self.source.maps, self.target.maps):
            if not np.array_equal(F.matmul(b, self.f1), F.matmul(self.f2, a)):
                return False
        return True

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other``."""
        F = self.field
        return Morphism(other.source, self.target, F.matmul(self.f1, other.f1), F.matmul(self.f2, other.f2),
                        check=False)

    def block(self) -> np.ndarray:
        """Block-diagonal matrix on ``M_1 (+) M_2``."""
        F = self.field
        out = F.zeros(self.target.total_dim, self.source.total_dim)
        out[: self.target.d1, : self.source.d1] = self.f1
        out[self.target.d1:, self.source.d1:] = self.f2
        return out

    def is_zero(self) -> bool:
        return el.is_zero(self.f1) and el.is_zero(self.f2)

    def rank(self) -> DimVector:
        F = self.field
        return DimVector(el.rank(F, self.f1), el.rank(F, self.f2))

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def kernel(self) -> tuple[KroneckerModule, "Morphism"]:
        F = self.field
        K1 = el.kernel(F, self.f1) if self.f1.shape[0] else F.eye(self.source.d1)
        K2 = el.kernel(F, self.f2) if self.f2.shape[0] else F.eye(self.source.d2)
        return submodule(self.source, K1, K2)

    def image(self) -> tuple[KroneckerModule, "Morphism"]:
        F = self.field
        return submodule(self.target, el.column_basis(F, self.f1), el.column_basis(F, self.f2))

    def cokernel(self) -> tuple[KroneckerModule, "Morphism"]:
        F = self.field
        return quotient(self.target, el.column_basis(F, self.f1), el.column_basis(F, self.f2))


def identity(M: KroneckerModule) -> Morphism:
    return Morphism(M, M, M.field.eye(M.d1), M.field.eye(M.d2), check=False)


def zero_morphism(M: KroneckerModule, N: KroneckerModule) -> Morphism:
    F = M.field
    return Morphism(M, N, F.zeros(N.d1, M.d1), F.zeros(N.d2, M.d2), check=False)


def _columns(F: Field, S, n: int) -> np.ndarray:
    S = F.array(S)
    return F.zeros(n, 0) if S.size == 0 else S.reshape(n, -1)


def submodule(M: KroneckerModule, S1: np.ndarray, S2: np.ndarray) -> tuple[KroneckerModule, Morphism]:
    """Submodule spanned by the columns of ``S1`` (in M_1) and ``S2`` (in M_2).

    Columns must be linearly independent and the pair invariant under the
    arrows.  Returns the submodule and its inclusion.
    """
    F = M.field
    S1, S2 = _columns(F, S1, M.d1), _columns(F, S2, M.d2)
    maps = []
    for a in M.maps:
        img = F.matmul(a, S1)
        X = el.solve_linear(F, S2, img)
        if X is None:
            raise InvalidModuleError("submodule: subspaces are not invariant under the arrows")
        maps.append(X)
    sub = KroneckerModule(F, M.r, S1.shape[1], S2.shape[1], tuple(maps))
    return sub, Morphism(sub, M, S1, S2, check=False)


def quotient(M: KroneckerModule, S1: np.ndarray, S2: np.ndarray) -> tuple[KroneckerModule, Morphism]:
    """Quotient of ``M`` by the invariant pair of subspaces, with its projection.

    Coordinates on each quotient space are the non-pivot positions of the
    row-reduced submodule basis.
    """
    F = M.field
    S1, S2 = _columns(F, S1, M.d1), _columns(F, S2, M.d2)
    Q1, L1 = el.complement_projector(F, S1)
    Q2, _ = el.complement_projector(F, S2)
    maps = tuple(F.matmul(Q2, F.matmul(a, L1)) for a in M.maps)
    quo = KroneckerModule(F, M.r, Q1.shape[0], Q2.shape[0], maps)
    return quo, Morphism(M, quo, Q1, Q2, check=False)


def direct_sum(*modules: KroneckerModule) -> KroneckerModule:
    if not modules:
        raise ValueError("direct_sum of nothing")
    first = modules[0]
    for other in modules[1:]:
        first.same_category(other)
    F = first.field
    d1 = sum(m.d1 for m in modules)
    d2 = sum(m.d2 for m in modules)
    maps = []
    for i in range(first.r):
        out = F.zeros(d2, d1)
        r0 = c0 = 0
        for m in modules:
            out[r0:r0 + m.d2, c0:c0 + m.d1] = m.maps[i]
            r0 += m.d2
            c0 += m.d1
        maps.append(out)
    return KroneckerModule(F, first.r, d1, d2, tuple(maps))


def dual(M: KroneckerModule) -> KroneckerModule:
    """The duality D: swap the vertices and transpose every map."""
    return KroneckerModule(M.field, M.r, M.d2, M.d1, tuple(m.T.copy() for m in M.maps))


def dual_morphism(f: Morphism) -> Morphism:
    """D(f): D(target) -> D(source)."""
    return Morphism(dual(f.target), dual(f.source), f.f2.T.copy(), f.f1.T.copy(), check=False)


# -- Hom spaces ---------------------------------------------------------------


def hom_system(M: KroneckerModule, N: KroneckerModule) -> np.ndarray:
    """Coefficient matrix of the commuting-square equations for Hom(M, N).

    Unknowns are ``vec(f1)`` then ``vec(f2)`` in row-major order; one block
    row of equations ``N_i f1 - f2 M_i = 0`` per arrow.
    """
    M.same_category(N)
    F = M.field
    n1 = N.d1 * M.d1
    n2 = N.d2 * M.d2
    rows = N.d2 * M.d1
    if rows == 0:
        return F.zeros(0, n1 + n2)
    eye_m1 = F.eye(M.d1)
    eye_n2 = F.eye(N.d2)
    blocks = []
    for a, b in zip(M.maps, N.maps):
        left = np.kron(b, eye_m1) if n1 else F.zeros(rows, 0)
        right = np.kron(eye_n2, a.T) if n2 else F.zeros(rows, 0)
        blocks.append(np.hstack([left, F.reduce(-right)]))
    return F.reduce(np.vstack(blocks))


def hom_dim(M: KroneckerModule, N: KroneckerModule) -> int:
    A = hom_system(M, N)
    return A.shape[1] - el.rank(M.field, A)


def hom_basis(M: KroneckerModule, N: KroneckerModule) -> list[Morphism]:
    """A basis of Hom(M, N)."""
    F = M.field
    A = hom_system(M, N)
    K = el.kernel(F, A)
    n1 = N.d1 * M.d1
    out = []
    for k in range(K.shape[1]):
        v = K[:, k]
        out.append(Morphism(M, N, v[:n1].reshape(N.d1, M.d1), v[n1:].reshape(N.d2, M.d2)))
    return out


def combine(basis: Sequence[Morphism], coeffs) -> Morphism:
    src, tgt = basis[0].source, basis[0].target
    F = src.field
    f1 = F.zeros(tgt.d1, src.d1)
    f2 = F.zeros(tgt.d2, src.d2)
    for c, f in zip(coeffs, basis):
        if c != 0:
            f1 = F.reduce(f1 + c * f.f1)
            f2 = F.reduce(f2 + c * f.f2)
    return Morphism(src, tgt, f1, f2, check=False)


def end_dim(M: KroneckerModule) -> int:
    return hom_dim(M, M)


# -- isomorphism --------------------------------------------------------------


@dataclass(frozen=True)
class IsoVerdict:
    status: str  # "yes" | "no" | "undetermined"
    witness: Optional[Morphism] = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def _coefficient_stream(F: Field, n: int, rng: np.random.Generator, budget: int):
    """Exhaustive coefficient vectors when the space is small, random ones otherwise.

    The boolean flag tells whether the stream was exhaustive.
    """
    if F.is_finite and F.p ** n <= budget:
        return itertools.product(range(F.p), repeat=n), True
    return (F.random(n, rng, bound=5) for _ in range(budget)), False


def is_isomorphic(M: KroneckerModule, N: KroneckerModule, seed: int = 0, budget: int = 256) -> IsoVerdict:
    """Decide M ~= N by hom-dimension certificates and a witness search."""
    M.same_category(N)
    if M.dim != N.dim:
        return IsoVerdict("no", reason=f"dimension vectors differ: {tuple(M.dim)} vs {tuple(N.dim)}")
    if M.is_zero():
        return IsoVerdict("yes", identity(M), "zero modules")
    h_mn, h_nm = hom_dim(M, N), hom_dim(N, M)
    if h_mn != h_nm:
        return IsoVerdict("no", reason=f"dim Hom(M,N)={h_mn} != dim Hom(N,M)={h_nm}")
    e_m, e_n = end_dim(M), end_dim(N)
    if e_m != e_n or h_mn != e_m:
        return IsoVerdict("no", reason=f"dim End(M)={e_m}, dim End(N)={e_n}, dim Hom(M,N)={h_mn}")
    basis = hom_basis(M, N)
    rng = np.random.default_rng(seed)
    stream, exhaustive = _coefficient_stream(M.field, len(basis), rng, budget)
    for coeffs in stream:
        f = combine(basis, coeffs)
        if f.is_isomorphism():
            return IsoVerdict("yes", f, "invertible morphism found")
    if exhaustive:
        return IsoVerdict("no", reason="no element of Hom(M,N) is invertible (exhaustive)")
    return IsoVerdict("undetermined", reason=f"no invertible morphism among {budget} random elements")


# -- indecomposability --------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    status: str  # "decomposable" | "indecomposable" | "probably_indecomposable"
    summands: tuple = ()  # ((A, incl_A), (B, incl_B)) when decomposable
    reason: str = ""


def fitting_split(phi: Morphism) -> Optional[tuple]:
    """Fitting decomposition ``M = im(phi^n) (+) ker(phi^n)`` when both parts are nonzero."""
    M = phi.source
    F = M.field
    n = max(M.total_dim, 1)
    p1 = el.power(F, phi.f1, n)
    p2 = el.power(F, phi.f2, n)
    im1, im2 = el.column_basis(F, p1), el.column_basis(F, p2)
    if (im1.shape[1], im2.shape[1]) in {(0, 0), (M.d1, M.d2)}:
        return None
    ker1 = el.kernel(F, p1) if M.d1 else F.zeros(0, 0)
    ker2 = el.kernel(F, p2) if M.d2 else F.zeros(0, 0)
    return submodule(M, im1, im2), submodule(M, ker1, ker2)


def _candidate_eigenvalues(phi: Morphism) -> list:
    """Scalars worth subtracting: all of F_p for small p, else 0 and block-trace averages."""
    F = phi.field
    if F.is_finite and F.p <= 37:
        return list(range(F.p))
    cands = [F.scalar(0)]
    for f in (phi.f1, phi.f2):
        d = f.shape[0]
        if d and (F.p is None or d % F.p):
            cands.append(F.scalar(F.scalar(sum(np.diag(f).tolist())) * F.inv(F.scalar(d))))
    return cands


def _shift(phi: Morphism, lam) -> Morphism:
    F = phi.field
    M = phi.source
    return Morphism(M, M, F.reduce(phi.f1 - lam * F.eye(M.d1)), F.reduce(phi.f2 - lam * F.eye(M.d2)), check=False)


def _is_nilpotent(phi: Morphism) -> bool:
    F = phi.field
    n = max(phi.source.total_dim, 1)
    return el.is_zero(el.power(F, phi.block(), n))


def _span_products(F: Field, left, right) -> np.ndarray:
    prods = [F.matmul(a, b).reshape(-1) for a in left for b in right]
    if not prods:
        return F.zeros(0, 0)
    return el.column_basis(F, np.array(prods, dtype=prods[0].dtype).T)


def _local_certificate(M: KroneckerModule, nilpotents: list[np.ndarray], end_basis: list[np.ndarray]) -> bool:
    """True when the ideal generated by ``nilpotents`` is nilpotent of codimension one in End(M)."""
    F = M.field
    n = M.total_dim
    ring = end_basis + [F.eye(n)]
    ideal = _span_products(F, ring, [F.matmul(x, y) for x in nilpotents for y in ring])
    if ideal.shape[1] != len(end_basis) - 1:
        return False
    gens = [ideal[:, k].reshape(n, n) for k in range(ideal.shape[1])]
    powr = gens
    for _ in range(n):
        if not powr:
            return True
        span = _span_products(F, powr, gens)
        powr = [span[:, k].reshape(n, n) for k in range(span.shape[1])]
    return not powr


def is_indecomposable(M: KroneckerModule, seed: int = 0, rounds: int = 32) -> Decomposition:
    """Fitting-decomposition search on End(M).

    Certified ``indecomposable`` when End(M) is one-dimensional or when the
    nilpotent parts of the basis endomorphisms generate a nilpotent ideal of
    codimension one (so End(M) is local); ``decomposable`` always carries an
    explicit splitting.
    """
    if M.is_zero():
        raise InvalidModuleError("zero module has no indecomposability verdict")
    basis = hom_basis(M, M)
    if len(basis) == 1:
        return Decomposition("indecomposable", reason="brick: dim End = 1")
    rng = np.random.default_rng(seed)
    candidates = list(basis) + [combine(basis, M.field.random(len(basis), rng)) for _ in range(rounds)]
    nilpotents = []
    unresolved = False
    for k, phi in enumerate(candidates):
        found = False
        for lam in _candidate_eigenvalues(phi):
            psi = _shift(phi, lam)
            if _is_nilpotent(psi):
                if k < len(basis):
                    nilpotents.append(psi.block())
                found = True
                break
            split = fitting_split(psi)
            if split is not None:
                return Decomposition("decomposable", split, reason="non-trivial Fitting decomposition")
        if not found and k < len(basis):
            unresolved = True
    if not unresolved and _local_certificate(M, nilpotents, [b.block() for b in basis]):
        return Decomposition("indecomposable", reason="End(M) is local")
    return Decomposition("probably_indecomposable", reason=f"no splitting in {len(candidates)} endomorphisms")


# -- random corpus ------------------------------------------------------------


def random_module(field: Field, r: int, dim, rng: np.random.Generator, density: float = 1.0) -> KroneckerModule:
    d1, d2 = dim
    maps = tuple(field.random((d2, d1), rng, density=density) for _ in range(r))
    return KroneckerModule(field, r, d1, d2, maps)
