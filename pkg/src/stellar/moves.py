"""Stellar moves: subdivision (starring), weld, relabeling, and traces."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .complex import (
    Complex,
    Simplex,
    _contains,
    _minus,
    as_simplex,
    face_lattice,
    facets,
    fmt_simplex,
    link,
    star,
)
from .errors import (
    AbsentSimplexError,
    AbsentVertexError,
    InvalidAtError,
    NotFactorableError,
    NotInjectiveError,
    SimplexPresentError,
    StellarError,
    VertexCollisionError,
)

log = logging.getLogger(__name__)

SUBDIVIDE = "S"
WELD = "W"
RELABEL = "R"


@dataclass(frozen=True)
class MoveRecord:
    """One stellar move.

    ``simplex``/``vertex`` are set for subdivisions and welds, ``permutation``
    (sorted ``(old, new)`` pairs) for relabelings.
    """

    kind: str
    simplex: Simplex = ()
    vertex: int = 0
    permutation: tuple = ()

    @classmethod
    def subdivide(cls, A, a: int) -> MoveRecord:
        return cls(SUBDIVIDE, as_simplex(A), a)

    @classmethod
    def weld(cls, A, a: int) -> MoveRecord:
        return cls(WELD, as_simplex(A), a)

    @classmethod
    def relabel(cls, mapping: Mapping[int, int]) -> MoveRecord:
        return cls(RELABEL, permutation=tuple(sorted((int(k), int(v)) for k, v in mapping.items())))

    def inverse(self) -> MoveRecord:
        if self.kind == SUBDIVIDE:
            return MoveRecord(WELD, self.simplex, self.vertex)
        if self.kind == WELD:
            return MoveRecord(SUBDIVIDE, self.simplex, self.vertex)
        return MoveRecord.relabel({v: k for k, v in self.permutation})

    def __str__(self):
        if self.kind == RELABEL:
            return "R " + ",".join(f"{i}→{j}" for i, j in self.permutation)
        return f"{self.kind} {self.vertex} ; " + " ".join(map(str, self.simplex))


@dataclass(frozen=True)
class MoveTrace:
    initial: Complex
    moves: tuple = field(default_factory=tuple)

    def final(self) -> Complex:
        return replay(self)

    def __len__(self):
        return len(self.moves)


def _cone_faces(a: int, A: Simplex) -> list[Simplex]:
    # Facets of A for the join a * dA; a vertex has the join unit as its
    # (reduced) boundary, which turns starring at a vertex into a relabel.
    return facets(A) if len(A) > 1 else [()]


def subdivide(K: Complex, A, a: int) -> Complex:
    """Star ``K`` at the face ``A`` with the new vertex ``a``:
    ``a * ∂A * lk(A, K) + Q(A, K)``."""
    A = as_simplex(A)
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"new vertex must be a positive integer, got {a!r}")
    if not K.has_face(A):
        raise AbsentSimplexError(f"{fmt_simplex(A)} is not a face of any generator")
    if a in K.vertex_star_index():
        raise VertexCollisionError(f"vertex {a} already occurs in the complex")
    st = star(A, K).generators
    lk = [_minus(g, A) for g in st]
    new = {tuple(sorted((a,) + f + b)) for f in _cone_faces(a, A) for b in lk}
    return Complex._of((K.generators - st) | new)


def _weld_factor(L: Complex, A: Simplex) -> Complex | None:
    """The ``B`` with ``∂A * B == L``, or None."""
    if not L:
        return None
    if len(A) == 1:
        return None if A[0] in L.vertex_star_index() else L
    F = A[1:]
    B = set()
    for g in L.vertex_star_index().get(F[0], ()):
        if _contains(g, F):
            b = _minus(g, F)
            if A[0] in b:
                return None
            B.add(b)
    if not B or len(A) * len(B) != len(L):
        return None
    gens = L.generators
    for f in facets(A):
        for b in B:
            if tuple(sorted(f + b)) not in gens:
                return None
    return Complex._of(frozenset(B))


def weld(K: Complex, A, a: int) -> Complex:
    """Inverse of :func:`subdivide`: remove ``a`` whose link is ``∂A * B``,
    giving ``A * B + Q(a, K)``."""
    A = as_simplex(A)
    idx = K.vertex_star_index()
    if a not in idx:
        raise AbsentVertexError(f"vertex {a} does not occur in the complex")
    if K.has_face(A):
        raise SimplexPresentError(f"{fmt_simplex(A)} is already a face of the complex")
    L = link((a,), K)
    B = _weld_factor(L, A)
    if B is None:
        raise NotFactorableError(f"link of {a} is not ∂{fmt_simplex(A)} * B for any B")
    if len(A) > 1 and not set(A) <= L.vertex_star_index().keys():
        log.warning("weld at %d uses labels of %s outside its link", a, fmt_simplex(A))
    new = {tuple(sorted(A + b)) for b in B.generators}
    return Complex._of((K.generators - set(idx[a])) | new)


def relabel(K: Complex, mapping: Mapping[int, int]) -> Complex:
    """Apply an enumeration change; labels missing from ``mapping`` are fixed."""
    verts = K.vertex_star_index()
    image = {}
    for v in verts:
        w = mapping.get(v, v)
        if not isinstance(w, int) or w < 1:
            raise ValueError(f"bad target label {w!r}")
        image[v] = w
    if len(set(image.values())) != len(image):
        raise NotInjectiveError("relabeling maps two vertices to one label")
    return Complex._of(frozenset(tuple(sorted(image[v] for v in g)) for g in K.generators))


def _candidate_simplexes(L: Complex):
    # Simplexes on L's labels, of dimension 1 .. dim(L)+1, all of whose
    # facets are faces of L.
    lattice = face_lattice(L)
    verts = sorted(L.vertex_star_index())
    for d in range(1, L.dim + 2):
        below = lattice[d - 1]
        for f in sorted(below):
            for v in verts:
                if v > f[-1]:
                    A = f + (v,)
                    if all(g in below for g in facets(A)):
                        yield A


@lru_cache(maxsize=65536)
def _factor_link_cached(L: Complex) -> tuple:
    out = []
    for A in _candidate_simplexes(L):
        B = _weld_factor(L, A)
        if B is not None:
            out.append((A, B))
    out.sort(key=lambda ab: ab[0])
    return tuple(out)


def factor_link(L: Complex, exclude: Complex | None = None) -> list[tuple]:
    """All ``(A, B)`` with ``∂A * B == L`` and ``A`` not a face of ``exclude``.

    ``B`` is the join unit when ``L`` is exactly ``∂A``.  Results are sorted by
    ``A``.
    """
    if not L or L.has_unit:
        return []
    found = _factor_link_cached(L)
    if exclude is None:
        return list(found)
    return [(A, B) for A, B in found if not exclude.has_face(A)]


def available_welds(K: Complex, vertices=None) -> list[MoveRecord]:
    """Valid weld records at the given vertices (default: all), sorted."""
    idx = K.vertex_star_index()
    out = []
    for v in sorted(idx if vertices is None else vertices):
        if v not in idx:
            continue
        for A, _ in factor_link(link((v,), K), exclude=K):
            out.append(MoveRecord(WELD, A, v))
    out.sort(key=lambda m: (m.simplex, m.vertex))
    return out


def enumerate_moves(K: Complex) -> list[MoveRecord]:
    """Subdivisions at every face of positive dimension (fresh vertex
    ``max_label + 1``) followed by every valid weld."""
    if not K:
        return []
    fresh = K.max_label() + 1
    subs = [MoveRecord(SUBDIVIDE, A, fresh) for A in face_lattice(K).all_faces() if len(A) > 1]
    subs.sort(key=lambda m: m.simplex)
    return subs + available_welds(K)


def apply_move(K: Complex, move: MoveRecord) -> Complex:
    if move.kind == SUBDIVIDE:
        return subdivide(K, move.simplex, move.vertex)
    if move.kind == WELD:
        return weld(K, move.simplex, move.vertex)
    if move.kind == RELABEL:
        return relabel(K, dict(move.permutation))
    raise ValueError(f"unknown move kind {move.kind!r}")


def replay(trace: MoveTrace) -> Complex:
    K = trace.initial
    for i, move in enumerate(trace.moves, start=1):
        try:
            K = apply_move(K, move)
        except StellarError as exc:
            raise InvalidAtError(i, exc) from exc
    return K
