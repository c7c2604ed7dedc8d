"""Second Lawrence liftings, partial liftings, and generalized Lawrence matrices.

The lifting of an m x s base T is the (m+s) x 2s block matrix
[[T, 0], [I, I]].  For a subset omega of {1..s} the partial lifting removes
row m+i and column s+i for each i in omega; the map u |-> (u, -u restricted
to the complement of omega) carries the kernel of T isomorphically onto the
kernel of the partial lifting and the Graver basis onto the Graver basis.

Generalized Lawrence matrices realize a prescribed bouquet structure over a
base configuration: block i spends one column per entry of its coefficient
vector c_i, the top rows carry multiples lambda_{ik} t_i with
lambda_i . c_i = 1, and one dedicated row per extra column wires the block
together.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import (
    BezoutMismatchError,
    FirstComponentError,
    FullSupportError,
    GcdNotOneError,
)
from .graver import GraverBasis
from .lattice import IntMatrix, IntVec, dot, intvec, xgcd

__all__ = [
    "OmegaSet",
    "GLMSpec",
    "lawrence_lift",
    "lawrence_lift_omega",
    "d_omega",
    "lifted_graver",
    "bezout_coefficients",
    "build_generalized_lawrence",
]


@dataclass(frozen=True)
class OmegaSet:
    """Sorted subset of {1, ..., ground} (1-based column indices)."""

    ground: int
    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.ground < 0:
            raise ValueError("ground size must be >= 0")
        ms = self.members
        if any(not 1 <= v <= self.ground for v in ms):
            raise ValueError(f"members must lie in 1..{self.ground}")
        if any(a >= b for a, b in zip(ms, ms[1:])):
            raise ValueError("members must be strictly increasing")

    @classmethod
    def of(cls, members: Iterable[int], ground: int) -> "OmegaSet":
        return cls(ground, tuple(sorted(set(intvec(members)))))

    def complement(self) -> tuple[int, ...]:
        inside = set(self.members)
        return tuple(j for j in range(1, self.ground + 1) if j not in inside)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, j: object) -> bool:
        return j in self.members


def lawrence_lift(T: IntMatrix) -> IntMatrix:
    """The (m+s) x 2s block matrix [[T, 0], [I, I]]."""
    s = T.ncols
    top = [row + (0,) * s for row in T.rows]
    bottom = [
        tuple(int(j == i) for j in range(s)) * 2 for i in range(s)
    ]
    return IntMatrix(tuple(top + bottom))


def lawrence_lift_omega(T: IntMatrix, omega: OmegaSet) -> IntMatrix:
    """The lifting with row m+i and column s+i deleted for each i in omega."""
    m, s = T.nrows, T.ncols
    if omega.ground != s:
        raise ValueError(f"omega ground {omega.ground} != {s} columns")
    full = lawrence_lift(T)
    drop_rows = {m + i - 1 for i in omega}
    drop_cols = {s + i - 1 for i in omega}
    rows = tuple(
        tuple(v for j, v in enumerate(row) if j not in drop_cols)
        for i, row in enumerate(full.rows)
        if i not in drop_rows
    )
    return IntMatrix(rows)


def d_omega(u: Iterable[int], omega: OmegaSet) -> IntVec:
    """u followed by the negation of u on the coordinates outside omega."""
    u = intvec(u)
    if len(u) != omega.ground:
        raise ValueError(f"length mismatch: {len(u)} vs ground {omega.ground}")
    return u + tuple(-u[j - 1] for j in omega.complement())


def lifted_graver(gr: GraverBasis, omega: OmegaSet) -> GraverBasis:
    """Graver basis of the partial lifting: the image of gr under d_omega.

    The image representatives stay canonically signed and sorted because
    d_omega prefixes each vector with itself.
    """
    lifted = lawrence_lift_omega(gr.matrix, omega)
    return GraverBasis(lifted, tuple(d_omega(g, omega) for g in gr.elements))


def bezout_coefficients(c: Iterable[int]) -> IntVec:
    """Deterministic lambda with lambda . c = 1, via iterated extended Euclid.

    Once the running gcd reaches 1 all remaining coefficients are 0, so short
    vectors of coefficients come out of gcd-1 prefixes.
    """
    c = intvec(c)
    if not c:
        raise ValueError("empty vector")
    g = c[0]
    lam = [1]
    for entry in c[1:]:
        if g == 1:
            lam.append(0)
            continue
        g, x, y = xgcd(g, entry)
        lam = [x * l for l in lam] + [y]
    if g == -1:
        return tuple(-l for l in lam)
    if g != 1:
        raise GcdNotOneError(f"gcd of {c} is {abs(g)}, not 1")
    return tuple(lam)


@dataclass(frozen=True)
class GLMSpec:
    """Base matrix plus per-column coefficient vectors for the construction.

    Every c_i must have full support, gcd 1, and a positive first entry; a
    supplied lambda_i must satisfy lambda_i . c_i = 1 (computed via
    bezout_coefficients when absent).
    """

    base: IntMatrix
    c_vectors: tuple[IntVec, ...]
    lambdas: tuple[IntVec, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.c_vectors) != self.base.ncols:
            raise ValueError(
                f"{len(self.c_vectors)} coefficient vectors for {self.base.ncols} columns"
            )
        for i, c in enumerate(self.c_vectors, start=1):
            if not c:
                raise ValueError(f"c_{i} is empty")
            if any(a == 0 for a in c):
                raise FullSupportError(f"c_{i} = {c} has a zero entry")
            g = 0
            for a in c:
                g = gcd(g, a)
            if g != 1:
                raise GcdNotOneError(f"c_{i} = {c} has gcd {g}")
            if c[0] <= 0:
                raise FirstComponentError(f"c_{i} = {c} must start positive")
        if self.lambdas is not None:
            if len(self.lambdas) != len(self.c_vectors):
                raise ValueError("one lambda vector per c vector required")
            for i, (c, lam) in enumerate(zip(self.c_vectors, self.lambdas), start=1):
                if len(lam) != len(c):
                    raise ValueError(f"lambda_{i} has length {len(lam)}, c_{i} {len(c)}")
                if dot(lam, c) != 1:
                    raise BezoutMismatchError(f"lambda_{i} . c_{i} = {dot(lam, c)} != 1")


def build_generalized_lawrence(spec: GLMSpec) -> IntMatrix:
    """Assemble the generalized Lawrence matrix for ``spec``.

    Shape: m + sum(m_i - 1) rows and sum(m_i) columns, where m_i = len(c_i).
    Column (i, k) holds lambda_{ik} t_i on the top block; for each i and each
    k >= 2 a dedicated row has -c_{ik} at column (i, 1) and c_{i1} at column
    (i, k).
    """
    T = spec.base
    cs = spec.c_vectors
    lams = spec.lambdas or tuple(bezout_coefficients(c) for c in cs)
    width = sum(len(c) for c in cs)
    offsets = []
    pos = 0
    for c in cs:
        offsets.append(pos)
        pos += len(c)
    rows: list[tuple[int, ...]] = []
    for r in range(T.nrows):
        row: list[int] = []
        for i, lam in enumerate(lams):
            ti = T.rows[r][i]
            row.extend(l * ti for l in lam)
        rows.append(tuple(row))
    for i, c in enumerate(cs):
        for k in range(1, len(c)):
            row = [0] * width
            row[offsets[i]] = -c[k]
            row[offsets[i] + k] = c[0]
            rows.append(tuple(row))
    return IntMatrix(tuple(rows))
