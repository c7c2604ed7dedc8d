"""Exact integer linear algebra for toric-ideal computations.

Vectors are plain tuples of Python ints and matrices are immutable tuples of
row tuples, so every value is hashable, arbitrary precision, and safe to
share between threads.  Nothing in this package touches floating point.

Sign convention used throughout: a "canonical" vector has its lowest-index
nonzero entry positive, and kernel bases are returned in Hermite normal form,
so repeated runs produce identical output.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

IntVec = tuple[int, ...]

__all__ = [
    "IntVec",
    "IntMatrix",
    "KernelBasis",
    "intvec",
    "vec_add",
    "vec_sub",
    "vec_neg",
    "vec_scale",
    "dot",
    "positive_part",
    "negative_part",
    "support",
    "infinity_norm",
    "canon_sign",
    "primitive_part",
    "conformal_leq",
    "is_semiconformal_sum",
    "determinant",
    "kernel_lattice_basis",
    "is_pointed",
    "xgcd",
]


def intvec(entries: Iterable[int]) -> IntVec:
    """Coerce a sequence of exact integers to a tuple, rejecting floats."""
    return tuple(operator.index(e) for e in entries)


def _same_length(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")


def vec_add(u: IntVec, v: IntVec) -> IntVec:
    _same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: IntVec, v: IntVec) -> IntVec:
    _same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: IntVec) -> IntVec:
    return tuple(-a for a in u)


def vec_scale(k: int, u: IntVec) -> IntVec:
    return tuple(k * a for a in u)


def dot(u: IntVec, v: IntVec) -> int:
    _same_length(u, v)
    return sum(a * b for a, b in zip(u, v))


def positive_part(u: IntVec) -> IntVec:
    """u+ in the unique decomposition u = u+ - u- with disjoint supports."""
    return tuple(a if a > 0 else 0 for a in u)


def negative_part(u: IntVec) -> IntVec:
    """u- in the unique decomposition u = u+ - u- with disjoint supports."""
    return tuple(-a if a < 0 else 0 for a in u)


def support(u: IntVec) -> tuple[int, ...]:
    """1-based indices of the nonzero entries."""
    return tuple(i + 1 for i, a in enumerate(u) if a)


def infinity_norm(u: IntVec) -> int:
    return max((abs(a) for a in u), default=0)


def canon_sign(u: IntVec) -> IntVec:
    """Flip the sign, if needed, so the lowest-index nonzero entry is positive."""
    for a in u:
        if a > 0:
            return u
        if a < 0:
            return vec_neg(u)
    return u


def primitive_part(v: IntVec, normalize_sign: bool = False) -> IntVec:
    """v divided by the gcd of its entries; optionally sign-normalized."""
    v = intvec(v)
    if not any(v):
        raise ValueError("zero vector has no primitive part")
    g = 0
    for a in v:
        g = gcd(g, a)
    w = tuple(a // g for a in v)
    return canon_sign(w) if normalize_sign else w


def conformal_leq(g: IntVec, u: IntVec) -> bool:
    """Conformal order: g+ <= u+ and g- <= u- componentwise."""
    _same_length(g, u)
    for a, b in zip(g, u):
        if a > 0 and a > b:
            return False
        if a < 0 and a < b:
            return False
    return True


def is_semiconformal_sum(u: IntVec, v: IntVec, w: IntVec) -> bool:
    """True iff u = v + w and the sum is semiconformal.

    Semiconformality requires, for every index i, that v_i > 0 implies
    w_i >= 0 and that w_i < 0 implies v_i <= 0.
    """
    _same_length(u, v)
    _same_length(u, w)
    if any(a != b + c for a, b, c in zip(u, v, w)):
        return False
    for b, c in zip(v, w):
        if b > 0 and not c >= 0:
            return False
        if c < 0 and not b <= 0:
            return False
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """Immutable exact-integer matrix; the columns are the configuration vectors."""

    rows: tuple[IntVec, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(intvec(r) for r in rows))

    @classmethod
    def from_cols(cls, cols: Iterable[Iterable[int]], *, nrows: int | None = None) -> "IntMatrix":
        cols = [intvec(c) for c in cols]
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs an explicit row count")
            return cls(tuple(() for _ in range(nrows)))
        return cls(tuple(zip(*cols, strict=True)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @cached_property
    def cols(self) -> tuple[IntVec, ...]:
        if self.ncols == 0:
            return ()
        return tuple(zip(*self.rows))

    def col(self, j: int) -> IntVec:
        """Column by 0-based position."""
        return self.cols[j]

    def transpose(self) -> "IntMatrix":
        if self.ncols == 0:
            raise ValueError("cannot transpose a matrix with no columns")
        return IntMatrix(self.cols)

    def mul_vec(self, v: Sequence[int]) -> IntVec:
        if len(v) != self.ncols:
            raise ValueError(f"length mismatch: {len(v)} vs {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def restrict_columns(self, js: Iterable[int]) -> "IntMatrix":
        """Submatrix of the given 1-based column indices, in the given order."""
        js = tuple(js)
        if any(j < 1 or j > self.ncols for j in js):
            raise ValueError(f"column index out of range 1..{self.ncols}")
        return IntMatrix(tuple(tuple(row[j - 1] for j in js) for row in self.rows))

    @cached_property
    def rank(self) -> int:
        """Rank over the rationals, via exact integer elimination."""
        if self.ncols == 0:
            return 0
        mat = [list(r) for r in self.rows]
        return _row_echelon(mat, transform=False)[2]


@dataclass(frozen=True)
class KernelBasis:
    """A canonical basis of the saturated integer kernel lattice of ``matrix``.

    ``basis`` is n x r; its columns generate every integer u with
    matrix @ u = 0 (no finite-index defect).  Row i of ``basis`` is the Gale
    transform of column i of ``matrix``.
    """

    matrix: IntMatrix
    basis: IntMatrix

    @property
    def rank(self) -> int:
        return self.basis.ncols

    @property
    def gale_rows(self) -> tuple[IntVec, ...]:
        return self.basis.rows

    def contains(self, u: Sequence[int]) -> bool:
        """Exact membership of u in the kernel lattice (it is saturated)."""
        return not any(self.matrix.mul_vec(u))


def _row_echelon(mat: list[list[int]], transform: bool):
    """Integer row echelon via extended-gcd row operations.

    Returns (mat, U, rank); the row operations are unimodular, and U (when
    requested) tracks them so that U @ input == mat.  Pivot entries end up
    positive; zero rows sink to the bottom.
    """
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)] if transform else None
    piv = 0
    for col in range(nc):
        if piv == nr:
            break
        sel = next((i for i in range(piv, nr) if mat[i][col]), None)
        if sel is None:
            continue
        if sel != piv:
            mat[piv], mat[sel] = mat[sel], mat[piv]
            if U is not None:
                U[piv], U[sel] = U[sel], U[piv]
        for i in range(piv + 1, nr):
            if not mat[i][col]:
                continue
            a, b = mat[piv][col], mat[i][col]
            g, x, y = xgcd(a, b)
            pa, pb = a // g, b // g
            mat[piv], mat[i] = (
                [x * ra + y * rb for ra, rb in zip(mat[piv], mat[i])],
                [pa * rb - pb * ra for ra, rb in zip(mat[piv], mat[i])],
            )
            if U is not None:
                U[piv], U[i] = (
                    [x * ra + y * rb for ra, rb in zip(U[piv], U[i])],
                    [pa * rb - pb * ra for ra, rb in zip(U[piv], U[i])],
                )
        if mat[piv][col] < 0:
            mat[piv] = [-a for a in mat[piv]]
            if U is not None:
                U[piv] = [-a for a in U[piv]]
        piv += 1
    return mat, U, piv


def _hermite_rows(gens: Sequence[Sequence[int]]) -> list[IntVec]:
    """Row Hermite normal form of a full-row-rank generating set."""
    mat, _, rank = _row_echelon([list(g) for g in gens], transform=False)
    rows = mat[:rank]
    pivots = [next(j for j, a in enumerate(r) if a) for r in rows]
    for i in range(rank - 1, -1, -1):
        p = pivots[i]
        a = rows[i][p]
        for k in range(i):
            q = rows[k][p] // a
            if q:
                rows[k] = [rk - q * ri for rk, ri in zip(rows[k], rows[i])]
    return [tuple(r) for r in rows]


def determinant(A: IntMatrix) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = A.nrows
    if n != A.ncols:
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in A.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if m[i][k]), None)
            if sel is None:
                return 0
            m[k], m[sel] = m[sel], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=256)
def kernel_lattice_basis(A: IntMatrix) -> KernelBasis:
    """Canonical basis of the saturated lattice {u in Z^n : A u = 0}.

    Row-reduces A^T while carrying a unimodular transform; the transform rows
    that map to zero generate the full integer kernel (unimodularity rules
    out any finite-index sublattice, so no separate saturation step is
    needed).  The generators are then put in row Hermite form and returned
    as the columns of ``basis``.
    """
    if not any(any(row) for row in A.rows):
        raise ValueError("zero matrix")
    at = [list(col) for col in A.cols]
    _, U, rank = _row_echelon(at, transform=True)
    gens = U[rank:]
    if gens:
        gens = _hermite_rows(gens)
    basis = IntMatrix.from_cols(gens, nrows=A.ncols)
    return KernelBasis(A, basis)


def _normalize_ineq(row: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for a in row:
        g = gcd(g, a)
    if g > 1:
        return tuple(a // g for a in row)
    return tuple(row)


def _fourier_motzkin_feasible(ineqs: list[tuple[int, ...]], nvars: int) -> bool:
    """Exact rational feasibility of rows (a_1..a_k, c) meaning a . t >= c."""
    rows = {_normalize_ineq(r) for r in ineqs}
    for j in range(nvars):
        pos = [r for r in rows if r[j] > 0]
        neg = [r for r in rows if r[j] < 0]
        keep = set()
        for r in rows:
            if r[j] == 0:
                keep.add(r)
        for p in pos:
            for q in neg:
                keep.add(_normalize_ineq(tuple(-q[j] * pa + p[j] * qa for pa, qa in zip(p, q))))
        rows = set()
        for r in keep:
            if not any(r[:nvars]):
                if r[-1] > 0:
                    return False
                continue  # trivially satisfiable, drop
            rows.add(r)
    return True


def is_pointed(A: IntMatrix) -> bool:
    """True iff the kernel lattice meets the nonnegative orthant only in 0.

    Decided exactly over the rationals: with B the kernel basis, the kernel
    cone {t : B t >= 0} must contain no point making some coordinate of B t
    strictly positive.  Each candidate coordinate is checked by
    Fourier-Motzkin elimination on B t >= 0, (B t)_i >= 1.
    """
    B = kernel_lattice_basis(A).basis
    r = B.ncols
    if r == 0:
        return True
    cone = [row + (0,) for row in B.rows]
    for row in B.rows:
        if not any(row):
            continue
        if _fourier_motzkin_feasible(cone + [row + (1,)], r):
            return False
    return True
