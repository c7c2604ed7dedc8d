"""Graver bases: kernel vectors with no proper conformal decomposition.

``graver_basis`` runs a completion over the kernel lattice: seed with a
kernel basis, conformally reduce pairwise sums until closure, then keep the
minimal elements.  ``graver_brute_force`` independently enumerates every
kernel vector in a sup-norm ball and filters the minimal ones; it exists to
cross-check the completion and shares nothing with it beyond the kernel
basis itself.
"""

from __future__ import annotations

import itertools
from bisect import insort
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import NotPointedError
from .lattice import (
    IntMatrix,
    IntVec,
    _row_echelon,
    canon_sign,
    conformal_leq,
    determinant,
    infinity_norm,
    intvec,
    is_pointed,
    kernel_lattice_basis,
    vec_add,
    vec_neg,
    vec_sub,
)

__all__ = ["GraverBasis", "normal_form", "graver_basis", "graver_brute_force"]


@dataclass(frozen=True)
class GraverBasis:
    """Canonical Graver set of ``matrix``: one representative per +/- pair.

    ``elements`` holds the representatives (lowest-index nonzero entry
    positive, ascending lexicographic order); ``signed()`` is the full
    negation-closed set.
    """

    matrix: IntMatrix
    elements: tuple[IntVec, ...]

    def signed(self) -> tuple[IntVec, ...]:
        return self.elements + tuple(vec_neg(g) for g in self.elements)

    @cached_property
    def signed_set(self) -> frozenset[IntVec]:
        return frozenset(self.signed())

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: object) -> bool:
        return isinstance(u, tuple) and u in self.signed_set

    def max_norm(self) -> int:
        return max((infinity_norm(g) for g in self.elements), default=0)


def _reduce(v: IntVec, pool: list[IntVec]) -> IntVec:
    """Conformal reduction by the first applicable element of sorted ``pool``.

    Subtracting the largest conformal multiple of the chosen reducer gives
    the same result as repeated single subtraction, because reducers of the
    shrunken vector are reducers of the original and the scan order is fixed.
    """
    cur = v
    while any(cur):
        g = next((g for g in pool if conformal_leq(g, cur)), None)
        if g is None:
            break
        t = min(c // w for c, w in zip(cur, g) if w)
        cur = tuple(c - t * w for c, w in zip(cur, g))
    return cur


def normal_form(v: Iterable[int], reducers: Iterable[Iterable[int]]) -> IntVec:
    """Reduce v by the +/- closure of ``reducers`` until no reducer fits."""
    v = intvec(v)
    pool = set()
    for g in reducers:
        g = intvec(g)
        if len(g) != len(v):
            raise ValueError(f"length mismatch: {len(g)} vs {len(v)}")
        if any(g):
            pool.add(g)
            pool.add(vec_neg(g))
    return _reduce(v, sorted(pool))


@lru_cache(maxsize=128)
def graver_basis(A: IntMatrix) -> GraverBasis:
    """All nonzero kernel vectors of A with no proper conformal decomposition.

    Completion procedure: the pair queue is processed in a fixed order and a
    final pass removes anything still conformally reducible by another
    member, so the output is canonical.
    """
    if not is_pointed(A):
        raise NotPointedError("configuration is not pointed")
    kb = kernel_lattice_basis(A)
    seeds = sorted({canon_sign(c) for c in kb.basis.cols if any(c)})
    reps: list[IntVec] = list(seeds)
    pool: list[IntVec] = sorted(seeds + [vec_neg(s) for s in seeds])
    queue: deque[IntVec] = deque()
    for a, b in itertools.combinations(seeds, 2):
        queue.append(vec_add(a, b))
        queue.append(vec_sub(a, b))
    while queue:
        r = _reduce(queue.popleft(), pool)
        if not any(r):
            continue
        rep = canon_sign(r)
        for h in reps:
            queue.append(vec_add(rep, h))
            queue.append(vec_sub(rep, h))
        insort(reps, rep)
        insort(pool, rep)
        insort(pool, vec_neg(rep))
    minimal = tuple(
        g for g in reps if not any(h != g and conformal_leq(h, g) for h in pool)
    )
    return GraverBasis(A, minimal)


def _independent_rows(rows: tuple[IntVec, ...], r: int) -> list[int]:
    """First (lexicographic) set of r linearly independent rows."""
    chosen: list[list[int]] = []
    idx: list[int] = []
    for i, row in enumerate(rows):
        if len(idx) == r:
            break
        trial = [list(c) for c in chosen] + [list(row)]
        if _row_echelon(trial, transform=False)[2] == len(chosen) + 1:
            chosen.append(list(row))
            idx.append(i)
    assert len(idx) == r, "kernel basis must have full column rank"
    return idx


def _det_rows(rows: list[list[int]]) -> int:
    return determinant(IntMatrix.from_rows(rows))


def _adjugate(mat: list[list[int]]) -> list[list[int]]:
    n = len(mat)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(mat) if k != i]
            adj[j][i] = (-1) ** (i + j) * _det_rows(minor)
    return adj


def _kernel_points_in_ball(A: IntMatrix, box: int) -> list[IntVec]:
    """Every u in Ker_Z(A) with sup norm <= box, including 0.

    Complete by construction: coefficients against a full-rank row submatrix
    of the kernel basis are bounded through its adjugate, and every candidate
    coefficient vector in that range is tried.
    """
    kb = kernel_lattice_basis(A)
    r = kb.rank
    n = A.ncols
    if r == 0:
        return [(0,) * n]
    rows_idx = _independent_rows(kb.basis.rows, r)
    R = [list(kb.basis.rows[i]) for i in rows_idx]
    det = _det_rows(R)
    adj = _adjugate(R)
    bounds = [sum(abs(adj[j][i]) for i in range(r)) * box // abs(det) for j in range(r)]
    cols = kb.basis.cols
    pts: list[IntVec] = []
    for t in itertools.product(*(range(-b, b + 1) for b in bounds)):
        v = [0] * n
        for tk, c in zip(t, cols):
            if tk:
                for i, ci in enumerate(c):
                    v[i] += tk * ci
        if all(-box <= a <= box for a in v):
            pts.append(tuple(v))
    return pts


def graver_brute_force(A: IntMatrix, box: int) -> frozenset[IntVec]:
    """Nonzero kernel vectors with sup norm <= box that are conformally
    minimal within that ball.

    When ``box`` is at least the max norm of graver_basis(A), the result is
    exactly the negation-closed Graver set.
    """
    box = int(box)
    if box < 1:
        raise ValueError("box must be >= 1")
    if not is_pointed(A):
        raise NotPointedError("configuration is not pointed")
    pts = [p for p in _kernel_points_in_ball(A, box) if any(p)]
    ball = set(pts)
    return frozenset(
        v for v in pts if not any(g != v and conformal_leq(g, v) for g in ball)
    )
