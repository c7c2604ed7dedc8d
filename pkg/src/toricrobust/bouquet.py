"""Bouquet structure of a configuration.

Columns whose Gale transforms are parallel form a bouquet; the zero Gale
rows form the single free bouquet.  Each non-free bouquet carries a
primitive coefficient vector c_B (first entry positive) recording the
proportionality ratios of its Gale rows, and the bouquet vector
a_B = sum_j c_{B,j} a_j.  A bouquet is mixed when c_B has entries of both
signs, non-mixed when all entries are positive.

Column indices in every public structure here are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable

from .errors import FreeBouquetError, NonIncreasingError, TooFewColumnsError
from .lattice import (
    IntMatrix,
    IntVec,
    determinant,
    intvec,
    kernel_lattice_basis,
    primitive_part,
)

__all__ = [
    "FREE",
    "MIXED",
    "NON_MIXED",
    "Bouquet",
    "BouquetDecomposition",
    "gale_rows",
    "bouquet_decomposition",
    "is_simple",
    "bouquet_ideal",
    "is_general_position",
    "cyclic_configuration",
]

FREE = "free"
MIXED = "mixed"
NON_MIXED = "non-mixed"


@dataclass(frozen=True)
class Bouquet:
    """One bouquet: 1-based member columns plus class and defining vectors.

    ``c`` and ``a`` are absent for the free bouquet.
    """

    members: tuple[int, ...]
    kind: str
    c: IntVec | None = None
    a: IntVec | None = None

    @property
    def is_free(self) -> bool:
        return self.kind == FREE

    @property
    def is_mixed(self) -> bool:
        return self.kind == MIXED


@dataclass(frozen=True)
class BouquetDecomposition:
    """Ordered partition of the columns of ``matrix`` into bouquets."""

    matrix: IntMatrix
    bouquets: tuple[Bouquet, ...]

    def bouquet_of(self, col: int) -> Bouquet:
        for b in self.bouquets:
            if col in b.members:
                return b
        raise ValueError(f"column {col} out of range")

    def mixed_indices(self) -> tuple[int, ...]:
        """1-based positions of the mixed bouquets in the ordered partition."""
        return tuple(i + 1 for i, b in enumerate(self.bouquets) if b.kind == MIXED)

    def non_mixed_indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, b in enumerate(self.bouquets) if b.kind == NON_MIXED)

    def edge_kind(self, i: int, j: int) -> str | None:
        """Edge class between columns i and j (1-based): '+', '-', '0', or None."""
        rows = gale_rows(self.matrix)
        gi, gj = rows[i - 1], rows[j - 1]
        if not any(gi) and not any(gj):
            return "0"
        if not any(gi) or not any(gj) or not _parallel(gi, gj):
            return None
        k = next(p for p, a in enumerate(gi) if a)
        ratio = Fraction(gj[k], gi[k])
        return "+" if ratio > 0 else "-"


def gale_rows(A: IntMatrix) -> tuple[IntVec, ...]:
    """Gale transforms: row i of the kernel basis matrix, for each column i.

    A zero row means column i is free (its index supports a co-loop).
    """
    return kernel_lattice_basis(A).gale_rows


def _parallel(g: IntVec, h: IntVec) -> bool:
    """All 2x2 minors of the two rows vanish (pure integer test)."""
    return all(
        g[a] * h[b] == g[b] * h[a] for a, b in itertools.combinations(range(len(g)), 2)
    )


def bouquet_decomposition(A: IntMatrix) -> BouquetDecomposition:
    rows = gale_rows(A)
    n = A.ncols
    free = [i for i in range(n) if not any(rows[i])]
    assigned = set(free)
    groups: list[list[int]] = []
    for i in range(n):
        if i in assigned:
            continue
        members = [i] + [
            j
            for j in range(i + 1, n)
            if j not in assigned and _parallel(rows[i], rows[j])
        ]
        assigned.update(members)
        groups.append(members)
    bouquets = []
    if free:
        bouquets.append(Bouquet(tuple(i + 1 for i in free), FREE))
    for members in groups:
        c, kind = _bouquet_vector(rows, members)
        a = tuple(
            sum(cj * A.rows[r][m] for cj, m in zip(c, members))
            for r in range(A.nrows)
        )
        bouquets.append(Bouquet(tuple(m + 1 for m in members), kind, c, a))
    bouquets.sort(key=lambda b: b.members[0])
    return BouquetDecomposition(A, tuple(bouquets))


def _bouquet_vector(rows: tuple[IntVec, ...], members: list[int]) -> tuple[IntVec, str]:
    """Primitive coefficient vector and class of one non-free bouquet."""
    base = rows[members[0]]
    k = next(j for j, a in enumerate(base) if a)
    ratios = [Fraction(rows[m][k], base[k]) for m in members]
    mult = lcm(*(q.denominator for q in ratios))
    ints = tuple(int(q * mult) for q in ratios)  # denominators cleared exactly
    c = primitive_part(ints, normalize_sign=True)
    kind = MIXED if any(q < 0 for q in ratios) else NON_MIXED
    return c, kind


def is_simple(A: IntMatrix) -> bool:
    """True iff every bouquet is a singleton."""
    return all(len(b.members) == 1 for b in bouquet_decomposition(A).bouquets)


def bouquet_ideal(A: IntMatrix) -> tuple[IntMatrix, tuple[IntVec, ...]]:
    """The matrix with columns a_B (one per bouquet) plus the c vectors.

    Bouquets are taken in ascending least-member order.  Identically zero
    rows of the assembled matrix are dropped (they carry no relation), so a
    lifted construction hands back its base configuration.  For a simple A
    with no zero rows this returns A itself with all c = (1).
    """
    dec = bouquet_decomposition(A)
    if any(b.is_free for b in dec.bouquets):
        raise FreeBouquetError("free bouquet present; bouquet ideal undefined here")
    cols = [b.a for b in dec.bouquets]
    cs = tuple(b.c for b in dec.bouquets)
    mat = IntMatrix.from_cols(cols)
    keep = tuple(r for r in mat.rows if any(r))
    if keep and len(keep) < mat.nrows:
        mat = IntMatrix(keep)
    return mat, cs


def is_general_position(A: IntMatrix) -> bool:
    """True iff every d columns of A in Z^d are linearly independent."""
    d, n = A.nrows, A.ncols
    if n < d + 2:
        raise TooFewColumnsError(f"need at least {d + 2} columns, got {n}")
    for js in itertools.combinations(range(1, n + 1), d):
        if determinant(A.restrict_columns(js)) == 0:
            return False
    return True


def cyclic_configuration(d: int, ts: Iterable[int]) -> IntMatrix:
    """d x n matrix with columns (1, t, t^2, ..., t^(d-1)) on increasing t."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    ts = intvec(ts)
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise NonIncreasingError("parameters must be strictly increasing")
    if len(ts) < d + 2:
        raise TooFewColumnsError(f"need at least {d + 2} parameters, got {len(ts)}")
    return IntMatrix.from_cols(tuple(t**e for e in range(d)) for t in ts)
