"""Auslander-Reiten translation, Ext, explicit extensions and tau-orbit scans.

Everything is driven by the minimal projective presentation

    0 -> P_1^a --iota--> P_2^{d1} (+) P_1^c --pi--> M -> 0

(the algebra is hereditary, so the kernel of the cover is projective and,
having no vertex-1 part, a sum of copies of P_1).  Generator j of the P_2
copies goes to the j-th basis vector of M_1; the c copies of P_1 cover a
complement of the radical sum_i im M(gamma_i) inside M_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import exactlin as el
from .forms import coxeter, euler_form
from .quiver_rep import DimVector, InvalidModuleError, KroneckerModule, Morphism, direct_sum, dual, hom_dim
from .rank_props import Mode, has_equal_radical_property, has_equal_socle_property


@dataclass(frozen=True)
class Presentation:
    module: KroneckerModule
    cover: KroneckerModule  # P_2^{d1} (+) P_1^c
    c: int
    kernel: np.ndarray  # (r d1 + c) x a; columns span ker(pi) at vertex 2
    pi: Morphism
    iota: Morphism

    @property
    def a(self) -> int:
        return self.kernel.shape[1]


def _cover(F, r: int, d1: int, c: int) -> KroneckerModule:
    n2 = r * d1 + c
    maps = []
    for i in range(r):
        m = F.zeros(n2, d1)
        for j in range(d1):
            m[j * r + i, j] = 1
        maps.append(m)
    return KroneckerModule(F, r, d1, n2, tuple(maps))


def presentation(M: KroneckerModule) -> Presentation:
    """Minimal projective presentation of M."""
    F, r = M.field, M.r
    rad_cols = F.zeros(M.d2, r * M.d1)
    for j in range(M.d1):
        for i in range(r):
            rad_cols[:, j * r + i] = M.maps[i][:, j]
    if M.d2:
        _, piv = el.rref(F, rad_cols.T)
        free = [k for k in range(M.d2) if k not in set(piv)]
    else:
        free = []
    c = len(free)
    pi2 = np.hstack([rad_cols, F.eye(M.d2)[:, free]]) if M.d2 else F.zeros(0, r * M.d1 + c)
    P0 = _cover(F, r, M.d1, c)
    pi = Morphism(P0, M, F.eye(M.d1), pi2)
    K = el.kernel(F, pi2) if M.d2 else F.eye(r * M.d1 + c)
    a = K.shape[1]
    P1a = KroneckerModule(F, r, 0, a, tuple(F.zeros(a, 0) for _ in range(r)))
    iota = Morphism(P1a, P0, F.zeros(M.d1, 0), K)
    return Presentation(M, P0, c, K, pi, iota)


def _restriction_matrix(pres: Presentation, N: KroneckerModule) -> np.ndarray:
    """Matrix of Hom(P_0, N) -> Hom(P_1^a, N), phi -> phi o iota.

    Hom(P_0, N) = N_1^{d1} (+) N_2^c (images of the generators) and
    Hom(P_1^a, N) = N_2^a.
    """
    F = N.field
    M, K, r = pres.module, pres.kernel, N.r
    d1, c, a = M.d1, pres.c, pres.a
    n1, n2 = N.d1, N.d2
    out = F.zeros(a * n2, d1 * n1 + c * n2)
    for t in range(a):
        rows = slice(t * n2, (t + 1) * n2)
        for j in range(d1):
            block = F.zeros(n2, n1)
            for i in range(r):
                k = K[j * r + i, t]
                if k != 0:
                    block = F.reduce(block + k * N.maps[i])
            out[rows, j * n1:(j + 1) * n1] = block
        for l in range(c):
            k = K[r * d1 + l, t]
            if k != 0:
                col0 = d1 * n1 + l * n2
                out[rows, col0:col0 + n2] = F.reduce(k * F.eye(n2))
    return out


def hom_ext_presentation(M: KroneckerModule, N: KroneckerModule, pres: Optional[Presentation] = None) -> tuple:
    """(dim Hom(M,N), dim Ext(M,N)) from the kernel and cokernel of Hom(iota, N)."""
    M.same_category(N)
    pres = presentation(M) if pres is None else pres
    A = _restriction_matrix(pres, N)
    rk = el.rank(M.field, A)
    return A.shape[1] - rk, A.shape[0] - rk


def ext_dim_presentation(M: KroneckerModule, N: KroneckerModule) -> int:
    return hom_ext_presentation(M, N)[1]


def ext_dim(M: KroneckerModule, N: KroneckerModule) -> int:
    """dim Ext(M,N) = dim Hom(M,N) - <dim M, dim N> (the algebra is hereditary)."""
    e = hom_dim(M, N) - euler_form(M.r, M.dim, N.dim)
    if e < 0:
        raise ArithmeticError(f"negative Ext dimension {e}: Hom computation is inconsistent")
    return e


# -- the translate ------------------------------------------------------------


@dataclass(frozen=True)
class TauResult:
    translate: KroneckerModule
    stripped: dict  # summand name -> multiplicity
    inverse: bool = False

    @property
    def is_zero(self) -> bool:
        return self.translate.is_zero()


def tau(M: KroneckerModule) -> TauResult:
    """tau M = ker(nu(iota)), nu the Nakayama functor, for the minimal presentation.

    nu(P_1^a) = I_2^a and nu(P_2^{d1} (+) P_1^c) = I_1^{d1} (+) I_2^c; the
    cokernel of nu(iota) is nu of the projective summands of M, which gives
    their multiplicities.
    """
    if M.is_zero():
        raise InvalidModuleError("tau of the zero module")
    F, r = M.field, M.r
    pres = presentation(M)
    K, d1, c, a = pres.kernel, M.d1, pres.c, pres.a
    src_maps, tgt_maps = [], []
    for i in range(r):
        s = F.zeros(a, r * a)
        for t in range(a):
            s[t, t * r + i] = 1
        src_maps.append(s)
        tmap = F.zeros(c, d1 + r * c)
        for l in range(c):
            tmap[l, d1 + l * r + i] = 1
        tgt_maps.append(tmap)
    src = KroneckerModule(F, r, r * a, a, tuple(src_maps))
    tgt = KroneckerModule(F, r, d1 + r * c, c, tuple(tgt_maps))
    psi1 = F.zeros(d1 + r * c, r * a)
    for t in range(a):
        for i in range(r):
            for j in range(d1):
                psi1[j, t * r + i] = K[j * r + i, t]
            for l in range(c):
                psi1[d1 + l * r + i, t * r + i] = K[r * d1 + l, t]
    psi2 = K[r * d1:, :].copy()
    psi = Morphism(src, tgt, psi1, psi2)
    kernel_module, _ = psi.kernel()
    x, y = tgt.dim - psi.rank()
    stripped = {"P_1": y, "P_2": x - r * y}
    body = M.dim - DimVector(0, 1) * y - DimVector(1, r) * (x - r * y)
    expected = coxeter(r, body) if any(body) else DimVector(0, 0)
    if kernel_module.dim != expected:
        raise AssertionError(f"dim tau M = {tuple(kernel_module.dim)}, Coxeter predicts {tuple(expected)}")
    return TauResult(kernel_module, stripped)


def tau_inv(M: KroneckerModule) -> TauResult:
    """tau^{-1} M = D tau D M; injective summands are stripped."""
    res = tau(dual(M))
    names = {"P_1": "I_1", "P_2": "I_2"}
    return TauResult(dual(res.translate), {names[k]: v for k, v in res.stripped.items()}, inverse=True)


def tau_power(M: KroneckerModule, j: int) -> Optional[KroneckerModule]:
    """tau^j M (negative j for tau^{-1}); None once the orbit leaves through a (co)projective."""
    out = M
    for _ in range(abs(j)):
        if out.is_zero():
            return None
        out = (tau(out) if j > 0 else tau_inv(out)).translate
    return None if out.is_zero() else out


# -- extensions ---------------------------------------------------------------


class ExtensionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ExtensionWitness:
    middle: KroneckerModule
    inclusion: Morphism  # A -> middle
    projection: Morphism  # middle -> C
    hom_c_middle: int
    hom_c_split: int

    @property
    def certified_nonsplit(self) -> bool:
        return self.hom_c_middle < self.hom_c_split


def realize_extension(C: KroneckerModule, A: KroneckerModule, seed: int = 0) -> Optional[ExtensionWitness]:
    """A non-split extension 0 -> A -> B -> C -> 0, or None when Ext(C, A) = 0.

    B is the pushout of the presentation of C along a cocycle h: P_1^a -> A
    that does not factor through iota.
    """
    C.same_category(A)
    F, r = C.field, C.r
    pres = presentation(C)
    R = _restriction_matrix(pres, A)
    ext = R.shape[0] - el.rank(F, R)
    if ext == 0:
        return None
    _, L = el.complement_projector(F, el.column_basis(F, R))
    rng = np.random.default_rng(seed)
    coeffs = F.random(ext, rng)
    while el.is_zero(coeffs):
        coeffs = F.random(ext, rng)
    h = F.matmul(L, coeffs.reshape(-1, 1)).reshape(pres.a, A.d2).T  # column t = image of generator t
    S = direct_sum(A, pres.cover)
    rel = np.vstack([h, F.reduce(-pres.kernel)])
    Q1, L1 = el.complement_projector(F, F.zeros(S.d1, 0))
    Q2, L2 = el.complement_projector(F, el.column_basis(F, rel))
    B = KroneckerModule(F, r, Q1.shape[0], Q2.shape[0], tuple(F.matmul(Q2, F.matmul(m, L1)) for m in S.maps))
    inc = Morphism(A, B, F.matmul(Q1, F.eye(S.d1)[:, : A.d1]), F.matmul(Q2, F.eye(S.d2)[:, : A.d2]))
    zero_pi1 = np.hstack([F.zeros(C.d1, A.d1), pres.pi.f1])
    zero_pi2 = np.hstack([F.zeros(C.d2, A.d2), pres.pi.f2])
    proj = Morphism(B, C, F.matmul(zero_pi1, L1), F.matmul(zero_pi2, L2))
    wit = ExtensionWitness(B, inc, proj, hom_dim(C, B), hom_dim(C, A) + hom_dim(C, C))
    if not (inc.is_injective() and proj.is_surjective() and proj.compose(inc).is_zero()):
        raise AssertionError("pushout does not give a short exact sequence")
    if B.dim != A.dim + C.dim:
        raise AssertionError("middle term has the wrong dimension vector")
    if not wit.certified_nonsplit:
        raise AssertionError("extension splits although the cocycle is nonzero")
    return wit


def self_extension_tower(E: KroneckerModule, n: int, seed: int = 0, sub_first: bool = True) -> list:
    """[E, B_2, ..., B_n] with 0 -> B_k -> B_{k+1} -> E -> 0 non-split.

    With ``sub_first=False`` the new copy of E goes at the bottom instead:
    0 -> E -> B_{k+1} -> B_k -> 0.
    """
    if n < 1:
        raise ValueError("tower length must be at least 1")
    tower = [E]
    for k in range(1, n):
        C, A = (E, tower[-1]) if sub_first else (tower[-1], E)
        wit = realize_extension(C, A, seed=seed + k)
        if wit is None:
            raise ExtensionError(f"stage {k + 1}: Ext vanishes, the tower cannot grow")
        tower.append(wit.middle)
    return tower


# -- orbit scans --------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    j: int
    dim: DimVector
    esp: tuple  # ESP_i flags, i = 1..r-1
    erp: tuple


@dataclass(frozen=True)
class ConeScan:
    rows: tuple
    scope: str
    stopped: tuple  # (j, reason) for steps cut off by projectives/injectives

    def esp_monotone_along_tau_inv(self) -> bool:
        """Once M' = tau^j M is in ESP_i, so is tau^{j-1} M (within the window)."""
        by_j = {row.j: row for row in self.rows}
        return all(not (row.esp[i] and (row.j - 1) in by_j and not by_j[row.j - 1].esp[i])
                   for row in self.rows for i in range(len(row.esp)))

    def erp_monotone_along_tau(self) -> bool:
        by_j = {row.j: row for row in self.rows}
        return all(not (row.erp[i] and (row.j + 1) in by_j and not by_j[row.j + 1].erp[i])
                   for row in self.rows for i in range(len(row.erp)))

    def summary(self) -> dict:
        """Window-limited readings: least ESP / ERP level per step."""
        def least(flags):
            return next((i + 1 for i, f in enumerate(flags) if f), None)

        return {"window": [min(r.j for r in self.rows), max(r.j for r in self.rows)],
                "least_esp": {r.j: least(r.esp) for r in self.rows},
                "least_erp": {r.j: least(r.erp) for r in self.rows},
                "window_limited": True}


def cone_scan(M: KroneckerModule, lo: int, hi: int, mode: Optional[Mode] = None, check_hom: bool = False) -> ConeScan:
    """ESP_i / ERP_i membership of tau^j M for lo <= j <= hi."""
    if lo > 0 or hi < 0:
        raise ValueError("the window must contain 0")
    rows, stopped = [], []
    scope = None
    for step, js in ((tau, range(1, hi + 1)), (tau_inv, range(-1, lo - 1, -1))):
        cur = M
        for j in js:
            cur = step(cur).translate
            if cur.is_zero():
                stopped.append((j, "orbit ends at a projective" if step is tau else "orbit ends at an injective"))
                break
            rows.append((j, cur))
    rows.append((0, M))
    out = []
    for j, N in sorted(rows, key=lambda t: t[0]):
        esp, erp = [], []
        for i in range(1, M.r):
            v = has_equal_socle_property(N, i, mode, check_hom=check_hom)
            w = has_equal_radical_property(N, i, mode, check_hom=check_hom)
            scope = v.scope
            esp.append(v.holds)
            erp.append(w.holds)
        out.append(ScanRow(j, N.dim, tuple(esp), tuple(erp)))
    return ConeScan(tuple(out), scope, tuple(stopped))
