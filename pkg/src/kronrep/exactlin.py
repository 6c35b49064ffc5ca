"""Exact linear algebra over prime fields and the rationals.

Matrices are plain numpy arrays whose entries are canonical field elements:
``int64`` residues in ``[0, p)`` for small primes, Python ints for large
primes and :class:`fractions.Fraction` objects (``dtype=object``) over Q.
Every routine takes the :class:`Field` explicitly, so the same elimination
code serves both kinds of field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

# above this bound products of residues could overflow int64 inside a matmul
_INT64_PRIME_LIMIT = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field F_p (``p`` set) or the rationals (``p is None``)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def dtype(self):
        if self.p is not None and self.p <= _INT64_PRIME_LIMIT:
            return np.int64
        return object

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    def descriptor(self) -> dict:
        return {"rational": True} if self.p is None else {"prime": self.p}

    # -- element handling -------------------------------------------------

    def scalar(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.p is None:
            return Fraction(1) / Fraction(x)
        return pow(int(x), -1, self.p)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Bring an array produced by ring operations back to canonical form."""
        if self.p is None:
            return a
        return a % self.p

    def array(self, data, shape=None) -> np.ndarray:
        """Canonical array of field elements built from ints, Fractions or arrays."""
        if self.p is None:
            raw = np.asarray(data, dtype=object)
            out = np.empty(raw.shape, dtype=object)
            flat = out.reshape(-1)
            for k, x in enumerate(raw.reshape(-1)):
                flat[k] = Fraction(x)
        elif self.dtype is object:
            raw = np.asarray(data, dtype=object)
            out = np.empty(raw.shape, dtype=object)
            flat = out.reshape(-1)
            for k, x in enumerate(raw.reshape(-1)):
                flat[k] = self.scalar(x)
        else:
            raw = np.asarray(data)
            if raw.dtype == object:
                out = np.array([self.scalar(x) for x in raw.reshape(-1)], dtype=np.int64).reshape(raw.shape)
            else:
                out = np.asarray(raw, dtype=np.int64) % self.p
        if shape is not None:
            out = out.reshape(shape)
        return out

    def zeros(self, m: int, n: int) -> np.ndarray:
        if self.dtype is object:
            return self.array(np.zeros((m, n), dtype=np.int64))
        return np.zeros((m, n), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        if self.dtype is object:
            return self.array(np.eye(n, dtype=np.int64))
        return np.eye(n, dtype=np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return self.reduce(a @ b)

    def elements(self) -> Iterator:
        if self.p is None:
            raise ValueError("Q is infinite")
        return iter(range(self.p))

    def random(self, shape, rng: np.random.Generator, density: float = 1.0, bound: int = 3) -> np.ndarray:
        """Uniform random entries (Q: integers in [-bound, bound]); ``density`` < 1 zeroes entries."""
        if self.p is None:
            vals = rng.integers(-bound, bound + 1, size=shape)
        else:
            vals = rng.integers(0, self.p, size=shape)
        if density < 1.0:
            vals = vals * (rng.random(size=shape) < density)
        return self.array(vals)


# -- elimination --------------------------------------------------------------


def _nonzero_rows(col: np.ndarray) -> np.ndarray:
    if col.dtype == object:
        return np.array([k for k, x in enumerate(col) if x != 0], dtype=np.intp)
    return np.flatnonzero(col)


def rref(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns."""
    R = field.array(a).copy()
    if R.ndim != 2:
        raise ValueError("expected a 2-d array")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        below = _nonzero_rows(R[row:, col])
        if below.size == 0:
            continue
        piv = row + int(below[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = field.reduce(R[row] * field.inv(R[row, col]))
        others = _nonzero_rows(R[:, col])
        others = others[others != row]
        if others.size:
            R[others] = field.reduce(R[others] - np.outer(R[others, col], R[row]))
        pivots.append(col)
        row += 1
    return R, pivots


def rank(field: Field, a: np.ndarray) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(field, a)[1])


def rank_and_kernel(field: Field, a: np.ndarray) -> tuple[int, np.ndarray]:
    """Rank of ``a`` and a matrix whose columns form a basis of its null space."""
    a = np.asarray(a)
    m, n = a.shape
    if m == 0:
        return 0, field.eye(n)
    R, pivots = rref(field, a)
    free = [c for c in range(n) if c not in set(pivots)]
    K = field.zeros(n, len(free))
    for k, f in enumerate(free):
        K[f, k] = 1
        for j, pc in enumerate(pivots):
            K[pc, k] = field.reduce(-R[j, f]) if field.p is not None else -R[j, f]
    return len(pivots), K


def kernel(field: Field, a: np.ndarray) -> np.ndarray:
    return rank_and_kernel(field, a)[1]


def solve_linear(field: Field, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Some X with ``a @ X == b``, or ``None`` when the system is inconsistent."""
    a = field.array(a)
    b = field.array(b)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: A has {a.shape[0]} rows, B has {b.shape[0]}")
    n = a.shape[1]
    X = field.zeros(n, b.shape[1])
    if a.shape[0] == 0:
        return X
    R, pivots = rref(field, np.hstack([a, b]))
    if pivots and pivots[-1] >= n:
        return None
    for j, pc in enumerate(pivots):
        X[pc] = R[j, n:]
    return X


def inverse(field: Field, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    X = solve_linear(field, a, field.eye(n))
    if X is None or rank(field, a) < n:
        raise ValueError("matrix is singular")
    return X


def is_invertible(field: Field, a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and rank(field, a) == a.shape[0]


def column_basis(field: Field, a: np.ndarray) -> np.ndarray:
    """Canonical basis (as columns) of the column space of ``a``.

    Two matrices span the same column space iff their canonical bases are
    identical arrays.
    """
    a = np.asarray(a)
    if a.shape[1] == 0:
        return field.zeros(a.shape[0], 0)
    R, pivots = rref(field, a.T)
    return R[: len(pivots)].T.copy()


def complement_projector(field: Field, basis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates on ``k^n / span(basis)``.

    Returns ``(Q, L)`` where ``Q`` (``(n-k) x n``) has kernel exactly the column
    span of ``basis`` and ``L`` (``n x (n-k)``) is a section with ``Q @ L = I``.
    Coordinates are the non-pivot positions of the row-reduced basis.
    """
    n = basis.shape[0]
    if basis.shape[1] == 0:
        return field.eye(n), field.eye(n)
    R, pivots = rref(field, basis.T)
    R = R[: len(pivots)]
    nonpiv = [c for c in range(n) if c not in set(pivots)]
    eye = field.eye(n)
    Q = field.reduce(eye[nonpiv] - R[:, nonpiv].T @ eye[pivots])
    L = eye[:, nonpiv].copy()
    return Q, L


def power(field: Field, a: np.ndarray, k: int) -> np.ndarray:
    out = field.eye(a.shape[0])
    base = a
    while k:
        if k & 1:
            out = field.matmul(out, base)
        base = field.matmul(base, base)
        k >>= 1
    return out


def is_zero(a: np.ndarray) -> bool:
    return a.size == 0 or not np.any(a != 0)
