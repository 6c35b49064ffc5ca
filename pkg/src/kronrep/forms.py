"""Integer forms on dimension vectors of the r-Kronecker quiver."""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .quiver_rep import DimVector


def _check_r(r: int) -> None:
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")


def euler_form(r: int, d, e) -> int:
    """<d, e> = d1 e1 + d2 e2 - r d1 e2 (equals dim Hom - dim Ext for modules)."""
    _check_r(r)
    return d[0] * e[0] + d[1] * e[1] - r * d[0] * e[1]


def quadratic(r: int, d) -> int:
    """q(x, y) = x^2 + y^2 - r x y."""
    _check_r(r)
    x, y = d
    return x * x + y * y - r * x * y


def coxeter(r: int, d, inverse: bool = False) -> DimVector:
    """Apply the Coxeter matrix (dimension vector of tau M) or its inverse."""
    _check_r(r)
    x, y = d
    if inverse:
        return DimVector(-x + r * y, -r * x + (r * r - 1) * y)
    return DimVector((r * r - 1) * x - r * y, r * x - y)


class RootKind(str, Enum):
    REAL_PREPROJECTIVE = "real_root:preprojective"
    REAL_PREINJECTIVE = "real_root:preinjective"
    IMAGINARY = "imaginary_root"
    NOT_A_ROOT = "not_a_root"


class Classification(NamedTuple):
    kind: RootKind
    q: int

    @property
    def is_real(self) -> bool:
        return self.kind in (RootKind.REAL_PREPROJECTIVE, RootKind.REAL_PREINJECTIVE)


def classify_dimvector(r: int, d) -> Classification:
    """Where an indecomposable with dimension vector ``d`` can live.

    Real roots carry a unique indecomposable (preprojective iff d1 < d2);
    imaginary roots only regular ones; for q(d) > 1 there is none.
    """
    x, y = d
    if x < 0 or y < 0:
        raise ValueError(f"dimension vector must be non-negative, got {tuple(d)}")
    if x == 0 and y == 0:
        raise ValueError("zero dimension vector")
    q = quadratic(r, d)
    if q == 1:
        kind = RootKind.REAL_PREPROJECTIVE if x < y else RootKind.REAL_PREINJECTIVE
    elif q <= 0:
        kind = RootKind.IMAGINARY
    else:
        kind = RootKind.NOT_A_ROOT
    return Classification(kind, q)
