"""Constant and equal d-socle / d-radical rank, strata and test-family orthogonality.

Every "for all U in Gr_{d,r}" is replaced by a survey of subspaces.  An
exhaustive survey walks every F_q-rational point (answers are exact over
F_q); a sampled survey draws random points plus the coordinate subspaces and
only ever yields evidence.

ESP_d(M) is decided as "Soc_U(M) = M_2 for every surveyed U", which is the
same as Hom(X_U, M) = 0.  The literal statement "Soc_U(M) does not depend on
U" is computed alongside; the two agree unless M has the simple injective
module as a direct summand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Union

import numpy as np

from . import exactlin as el
from .exactlin import Field
from .quiver_rep import KroneckerModule, dual, hom_dim
from .testfamily import Subspace, SubspaceError, soc, soc_dim, rad, rad_dim, top_kernel, x_u_module

# -- survey modes -------------------------------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    """Every point of Gr_{d,r} over the module's own (finite) field."""

    def describe(self) -> dict:
        return {"mode": "exhaustive"}


@dataclass(frozen=True)
class Sample:
    """``count`` seeded random points plus the r coordinate-type subspaces."""

    count: int = 64
    seed: int = 0

    def describe(self) -> dict:
        return {"mode": "sample", "count": self.count, "seed": self.seed}


Mode = Union[Exhaustive, Sample]

EXACT = "exact_over_Fq"
SAMPLED = "sampled"


def default_mode(field: Field) -> Mode:
    return Exhaustive() if field.is_finite else Sample()


def _check_d(d: int, r: int) -> None:
    if not 1 <= d < r:
        raise SubspaceError(f"need 1 <= d < r, got d={d}, r={r}")


def gaussian_binomial(r: int, d: int, q: int) -> int:
    num = den = 1
    for k in range(d):
        num *= q ** (r - k) - 1
        den *= q ** (k + 1) - 1
    return num // den


def grassmannian_points(field: Field, d: int, r: int) -> Iterator[Subspace]:
    """Each F_q-point of Gr_{d,r} once, as RREF matrices grouped by pivot set."""
    if not field.is_finite:
        raise ValueError("exhaustive enumeration needs a finite field")
    _check_d(d, r)
    q = field.p
    for piv in itertools.combinations(range(r), d):
        free = [(j, c) for j in range(d) for c in range(piv[j] + 1, r) if c not in piv]
        for vals in itertools.product(range(q), repeat=len(free)):
            B = np.zeros((d, r), dtype=np.int64)
            for j, pc in enumerate(piv):
                B[j, pc] = 1
            for (j, c), v in zip(free, vals):
                B[j, c] = v
            yield Subspace(field, field.array(B))


def grassmannian_count(field: Field, d: int, r: int) -> int:
    _check_d(d, r)
    return gaussian_binomial(r, d, field.p)


def coordinate_subspaces(field: Field, d: int, r: int) -> list[Subspace]:
    """span{e_i, ..., e_{i+d-1}} (indices mod r); together they contain every e_i."""
    return [Subspace.coordinate(field, r, [(i + k) % r for k in range(d)]) for i in range(r)]


def sample_points(field: Field, d: int, r: int, count: int, seed: int) -> list[Subspace]:
    _check_d(d, r)
    rng = np.random.default_rng(seed)
    seen: dict[Subspace, None] = dict.fromkeys(coordinate_subspaces(field, d, r))
    attempts = 0
    while attempts < 20 * count and len(seen) < count + r:
        attempts += 1
        A = field.random((d, r), rng, bound=9)
        if el.rank(field, A) == d:
            seen.setdefault(Subspace.span(field, A))
    return list(seen)


def survey(field: Field, d: int, r: int, mode: Optional[Mode] = None) -> tuple[list[Subspace], str]:
    mode = default_mode(field) if mode is None else mode
    if isinstance(mode, Exhaustive):
        return list(grassmannian_points(field, d, r)), EXACT
    if mode.count < 1:
        raise ValueError("empty sample")
    return sample_points(field, d, r, mode.count, mode.seed), SAMPLED


# -- profiles and verdicts ----------------------------------------------------


@dataclass(frozen=True)
class RankProfile:
    d: int
    mode: Mode
    scope: str
    observations: tuple  # (Subspace, soc_dim, rad_dim)

    def __post_init__(self):
        if not self.observations:
            raise ValueError("empty survey")

    @property
    def min_soc(self) -> int:
        return min(o[1] for o in self.observations)

    @property
    def max_soc(self) -> int:
        return max(o[1] for o in self.observations)

    @property
    def min_rad(self) -> int:
        return min(o[2] for o in self.observations)

    @property
    def max_rad(self) -> int:
        return max(o[2] for o in self.observations)

    def argmin(self, k: int) -> Subspace:
        return min(self.observations, key=lambda o: o[k])[0]

    def argmax(self, k: int) -> Subspace:
        return max(self.observations, key=lambda o: o[k])[0]


@dataclass(frozen=True)
class PropertyVerdict:
    prop: str  # "csr" | "crr" | "esp" | "erp"
    d: int
    holds: bool
    scope: str
    witness: tuple = ()  # Subspaces certifying a failure
    detail: str = ""
    extra: dict = dc_field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.holds:
            return "no"
        return "yes" if self.scope == EXACT else "evidence_only"

    def __bool__(self):
        return self.holds


def socle_rank_profile(M: KroneckerModule, d: int, mode: Optional[Mode] = None, points=None) -> RankProfile:
    _check_d(d, M.r)
    mode = default_mode(M.field) if mode is None else mode
    if points is None:
        points, scope = survey(M.field, d, M.r, mode)
    else:
        scope = EXACT if isinstance(mode, Exhaustive) else SAMPLED
    obs = tuple((U, soc_dim(M, U), rad_dim(M, U)) for U in points)
    return RankProfile(d, mode, scope, obs)


def has_constant_socle_rank(M: KroneckerModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    prof = socle_rank_profile(M, d, mode)
    return _constant_verdict("csr", prof, 1)


def has_constant_radical_rank(M: KroneckerModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    """CRR_d(M) decided as CSR_d(DM), checked against the direct radical ranks."""
    via_dual = _constant_verdict("crr", socle_rank_profile(dual(M), d, mode), 1)
    direct = _constant_verdict("crr", socle_rank_profile(M, d, mode), 2)
    if via_dual.holds != direct.holds:
        raise AssertionError("CRR via duality disagrees with the direct radical computation")
    return direct


def _constant_verdict(prop: str, prof: RankProfile, k: int) -> PropertyVerdict:
    lo = min(o[k] for o in prof.observations)
    hi = max(o[k] for o in prof.observations)
    what = "socle" if k == 1 else "radical"
    if lo == hi:
        return PropertyVerdict(prop, prof.d, True, prof.scope, detail=f"{what} dimension {lo} on every surveyed U",
                               extra={"value": lo, "points": len(prof.observations)})
    return PropertyVerdict(prop, prof.d, False, prof.scope, (prof.argmin(k), prof.argmax(k)),
                           detail=f"{what} dimension {lo} vs {hi}", extra={"min": lo, "max": hi})


def literal_equal_socle(M: KroneckerModule, points) -> tuple[bool, tuple]:
    """Whether Soc_U(M) is literally the same subspace for every U in ``points``."""
    first = None
    for U in points:
        B = soc(M, U).basis
        if first is None:
            first = (U, B)
        elif not np.array_equal(first[1], B):
            return False, (first[0], U)
    return True, ()


def has_equal_socle_property(M: KroneckerModule, d: int, mode: Optional[Mode] = None,
                             check_hom: bool = True) -> PropertyVerdict:
    """ESP_d(M): Soc_U(M) = M_2 for every surveyed U, i.e. Hom(X_U, M) = 0.

    With ``check_hom`` the Hom dimensions are computed as well and must match
    dim Soc_U(M) - dim M_2 at every point.  ``extra["literal"]`` records
    whether the socles are literally equal; it must agree with the verdict
    whenever M has no simple injective summand.
    """
    _check_d(d, M.r)
    points, scope = survey(M.field, d, M.r, mode)
    bad = None
    for U in points:
        excess = soc_dim(M, U) - M.d2
        if check_hom:
            h = hom_dim(x_u_module(U).module, M)
            if h != excess:
                raise AssertionError(f"dim Hom(X_U, M) = {h} but dim Soc_U(M) - dim M_2 = {excess} at {U}")
        if excess and bad is None:
            bad = (U, excess)
            if not check_hom:
                break
    literal, lit_witness = literal_equal_socle(M, points)
    no_top_summand = top_kernel(M).shape[1] == 0
    if no_top_summand and literal != (bad is None):
        raise AssertionError("literal socle equality disagrees with Soc_U(M) = M_2")
    extra = {"literal": literal, "simple_injective_summand": not no_top_summand, "points": len(points)}
    if bad is None:
        return PropertyVerdict("esp", d, True, scope, detail="Soc_U(M) = M_2 on every surveyed U", extra=extra)
    U, excess = bad
    return PropertyVerdict("esp", d, False, scope, (U,), detail=f"dim Hom(X_U, M) = {excess} at the witness",
                           extra=extra)


def has_equal_radical_property(M: KroneckerModule, d: int, mode: Optional[Mode] = None,
                               check_hom: bool = True) -> PropertyVerdict:
    """ERP_d(M): Rad_U(M) = M_2 for every surveyed U, decided as ESP_d(DM)."""
    v = has_equal_socle_property(dual(M), d, mode, check_hom=check_hom)
    points = survey(M.field, d, M.r, mode)[0] if v.holds else [v.witness[0]]
    for U in points:
        if (rad_dim(M, U) == M.d2) != v.holds:
            raise AssertionError(f"direct Rad_U computation disagrees with the dual socle at {U}")
    detail = "Rad_U(M) = M_2 on every surveyed U" if v.holds else "Rad_U(M) != M_2 at the witness"
    return PropertyVerdict("erp", d, v.holds, v.scope, v.witness, detail, v.extra)


def check_property(prop: str, M: KroneckerModule, d: int, mode: Optional[Mode] = None) -> PropertyVerdict:
    table = {"csr": has_constant_socle_rank, "crr": has_constant_radical_rank,
             "esp": has_equal_socle_property, "erp": has_equal_radical_property}
    if prop not in table:
        raise ValueError(f"unknown property {prop!r}; choose from {sorted(table)}")
    return table[prop](M, d, mode)


def recheck_witness(verdict: PropertyVerdict, M: KroneckerModule) -> bool:
    """Re-derive a "no" verdict from its witness alone."""
    if verdict.holds:
        return True
    w = verdict.witness
    if verdict.prop == "csr":
        return soc_dim(M, w[0]) != soc_dim(M, w[1])
    if verdict.prop == "crr":
        return rad_dim(M, w[0]) != rad_dim(M, w[1])
    if verdict.prop == "esp":
        return soc_dim(M, w[0]) > M.d2
    if verdict.prop == "erp":
        return rad(M, w[0]).dim < M.d2
    raise ValueError(verdict.prop)


def stratum(M: KroneckerModule, mode: Optional[Mode] = None) -> tuple[Optional[int], str]:
    """Least i with M in ESP_i (ESP_i grows with i), or None; plus the scope."""
    scope = EXACT
    for i in range(1, M.r):
        v = has_equal_socle_property(M, i, mode, check_hom=False)
        scope = v.scope
        if v.holds:
            return i, scope
    return None, scope


def is_u_trivial(M: KroneckerModule, U: Subspace) -> bool:
    """dim Hom(X_U, M) attains its upper bound dim M_1."""
    h = hom_dim(x_u_module(U).module, M)
    if h > M.d1:
        raise AssertionError(f"dim Hom(X_U, M) = {h} exceeds dim M_1 = {M.d1}")
    return h == M.d1


@dataclass(frozen=True)
class OrthogonalityFlags:
    right: bool  # Hom(X_U, M) = 0 for all surveyed U
    left: bool  # Hom(M, X_U) = 0 for all surveyed U
    scope: str
    right_witness: Optional[Subspace] = None
    left_witness: Optional[Subspace] = None

    def __iter__(self):
        return iter((self.right, self.left))


def orthogonality_flags(M: KroneckerModule, d: int, mode: Optional[Mode] = None) -> OrthogonalityFlags:
    points, scope = survey(M.field, d, M.r, mode)
    rw = lw = None
    for U in points:
        X = x_u_module(U).module
        if rw is None and hom_dim(X, M):
            rw = U
        if lw is None and hom_dim(M, X):
            lw = U
        if rw is not None and lw is not None:
            break
    return OrthogonalityFlags(rw is None, lw is None, scope, rw, lw)
