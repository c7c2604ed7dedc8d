"""Indispensability, strong robustness, and the face complex of liftings.

A kernel vector is indispensable when it has no proper semiconformal
decomposition.  For a pointed configuration that reduces to a finite witness
scan: u fails exactly when some Graver element g not equal to u has
g+ <= u+ componentwise.  (Any proper semiconformal left summand v of u is a
kernel vector with v+ <= u+; v conformally decomposes into Graver elements,
each of which is itself such a left summand, and pointedness rules out the
degenerate multiples of u.)  The bounded brute-force search in the test
suite guards this reduction.

The face complex of a simple base T collects the subsets omega for which
the partial lifting's toric ideal is strongly robust; it is downward
closed, so enumeration walks subsets by cardinality and only tests a set
once all its one-smaller subsets are faces.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bouquet import gale_rows, is_simple
from .errors import FreeVectorError, NotInGraverError, NotPointedError, NotSimpleError
from .graver import GraverBasis, graver_basis
from .lattice import IntMatrix, IntVec, intvec, is_pointed, positive_part, vec_neg
from .lawrence import OmegaSet, lifted_graver

__all__ = [
    "IndispensableSet",
    "SimplicialComplex",
    "is_indispensable",
    "indispensable_set",
    "is_strongly_robust",
    "omega_is_face",
    "strongly_robust_complex",
    "induced_subcomplex",
]


@dataclass(frozen=True)
class IndispensableSet:
    """The members of a Graver basis with no proper semiconformal decomposition."""

    graver: GraverBasis
    elements: tuple[IntVec, ...]

    def signed(self) -> tuple[IntVec, ...]:
        return self.elements + tuple(vec_neg(g) for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: object) -> bool:
        return isinstance(u, tuple) and (u in self.elements or vec_neg(u) in self.elements)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face family stored as the antichain of maximal faces.

    Faces are sorted tuples of 1-based ground labels; maximal faces are kept
    in (cardinality, lexicographic) order.  A nonempty complex always
    contains the empty face.
    """

    ground: tuple[int, ...]
    maximal: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(
        cls, ground: Iterable[int], faces: Iterable[Iterable[int]]
    ) -> "SimplicialComplex":
        fs = {tuple(sorted(set(f))) for f in faces}
        maximal = sorted(
            (f for f in fs if not any(set(f) < set(g) for g in fs)),
            key=lambda f: (len(f), f),
        )
        return cls(tuple(ground), tuple(maximal))

    def is_face(self, face: Iterable[int]) -> bool:
        want = set(face)
        return any(want <= set(f) for f in self.maximal)

    @cached_property
    def _closure(self) -> frozenset[tuple[int, ...]]:
        out: set[tuple[int, ...]] = set()
        for f in self.maximal:
            for k in range(len(f) + 1):
                out.update(itertools.combinations(f, k))
        return frozenset(out)

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Every face, sorted by (cardinality, lexicographic)."""
        return tuple(sorted(self._closure, key=lambda f: (len(f), f)))

    def face_count(self) -> int:
        return len(self._closure)

    @property
    def dimension(self) -> int:
        """Max face cardinality minus one; -1 for the complex {empty set}."""
        if not self.maximal:
            return -1
        return max(len(f) for f in self.maximal) - 1


def _leq(a: IntVec, b: IntVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def is_indispensable(u: Iterable[int], gr: GraverBasis) -> bool:
    """True iff u (a Graver member) has no proper semiconformal decomposition.

    Witness scan: u fails exactly when some g in the negation-closed Graver
    set, g != u, satisfies g+ <= u+ componentwise.
    """
    u = intvec(u)
    if u not in gr:
        raise NotInGraverError(f"{u} is not in the Graver basis")
    up = positive_part(u)
    return not any(g != u and _leq(positive_part(g), up) for g in gr.signed())


def indispensable_set(gr: GraverBasis) -> IndispensableSet:
    return IndispensableSet(
        gr, tuple(g for g in gr.elements if is_indispensable(g, gr))
    )


def is_strongly_robust(A: IntMatrix) -> bool:
    """True iff every Graver element of A is indispensable."""
    gr = graver_basis(A)
    return len(indispensable_set(gr)) == len(gr)


def _require_simple_base(T: IntMatrix) -> None:
    if any(not any(row) for row in gale_rows(T)):
        raise FreeVectorError("base configuration has a free vector")
    if not is_simple(T):
        raise NotSimpleError("base configuration is not simple")
    if not is_pointed(T):
        raise NotPointedError("base configuration is not pointed")


def _face_verdict(gr: GraverBasis, omega: OmegaSet) -> bool:
    lifted = lifted_graver(gr, omega)
    # lifting preserves codimension
    T = gr.matrix
    assert (
        lifted.matrix.ncols - lifted.matrix.rank == T.ncols - T.rank
    ), "partial lifting changed the codimension"
    return all(is_indispensable(g, lifted) for g in lifted.elements)


def omega_is_face(gr: GraverBasis, omega: OmegaSet) -> bool:
    """Strong-robustness verdict on the partial lifting selected by omega.

    Works entirely on the image of gr under the lifting isomorphism; no
    Graver basis is recomputed.
    """
    _require_simple_base(gr.matrix)
    if omega.ground != gr.matrix.ncols:
        raise ValueError(f"omega ground {omega.ground} != {gr.matrix.ncols} columns")
    return _face_verdict(gr, omega)


def _map_verdicts(
    gr: GraverBasis, omegas: list[tuple[int, ...]], threads: int
) -> list[bool]:
    oms = [OmegaSet(gr.matrix.ncols, w) for w in omegas]
    if threads <= 1 or len(oms) <= 1:
        return [_face_verdict(gr, o) for o in oms]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(lambda o: _face_verdict(gr, o), oms))


def strongly_robust_complex(
    T: IntMatrix, threads: int = 1, graver: GraverBasis | None = None
) -> SimplicialComplex:
    """The complex of subsets whose partial lifting is strongly robust.

    Subsets are visited by (cardinality, lexicographic) order; a subset is
    tested only when all its one-smaller subsets are already faces, which is
    exact because the family is downward closed.  Verdicts within one level
    may be evaluated concurrently; the result does not depend on ``threads``.
    A precomputed ``graver`` basis of T (e.g. from a cache) is used as is.
    """
    _require_simple_base(T)
    if graver is not None and graver.matrix != T:
        raise ValueError("supplied Graver basis belongs to a different matrix")
    gr = graver if graver is not None else graver_basis(T)
    s = T.ncols
    faces: set[tuple[int, ...]] = set()
    level: list[tuple[int, ...]] = [()]
    while level:
        for w, ok in zip(level, _map_verdicts(gr, level, threads)):
            if ok:
                faces.add(w)
        k = len(level[0]) + 1
        level = [
            w
            for w in itertools.combinations(range(1, s + 1), k)
            if all(w[:i] + w[i + 1 :] in faces for i in range(k))
        ]
    return SimplicialComplex.from_faces(range(1, s + 1), faces)


def induced_subcomplex(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """The trace complex {face intersect sigma} on the ground set sigma."""
    sig = tuple(sorted(set(intvec(sigma))))
    if not set(sig) <= set(delta.ground):
        raise ValueError("sigma is not within the ground set")
    inside = set(sig)
    traces = {tuple(v for v in f if v in inside) for f in delta.maximal}
    return SimplicialComplex.from_faces(sig, traces)
