"""Simplicial chains over Z2.

A simplex is a sorted tuple of distinct positive integer labels.  A
:class:`Complex` is a finite set of generator simplexes, i.e. a chain with
coefficients in Z2: adding a simplex that is already present removes it.

The empty tuple ``()`` is allowed as a generator only as the unit of the
join (``Complex.unit()``).  It shows up in two places: in a link ``lk(A, K)``
when ``A`` is itself a generator of ``K``, and as the trivial factor ``B`` of
a link that is exactly ``∂A``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import SharedVertexError

Simplex = tuple  # tuple[int, ...], strictly increasing


def simplex(*labels: int) -> Simplex:
    """Build a canonical simplex from vertex labels given in any order.

    >>> simplex(3, 1, 2)
    (1, 2, 3)
    """
    if len(labels) == 1 and not isinstance(labels[0], int):
        labels = tuple(labels[0])
    for v in labels:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"vertex labels must be positive integers, got {v!r}")
    s = tuple(sorted(labels))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in simplex {labels!r}")
    return s


def facets(s: Simplex) -> list[Simplex]:
    """Codimension-one faces of ``s`` in lexicographic order (none for a vertex)."""
    if len(s) <= 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s) - 1, -1, -1)]


def faces(s: Simplex) -> Iterator[Simplex]:
    """All nonempty faces of ``s``, including ``s`` itself."""
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def _union(p: Simplex, q: Simplex) -> Simplex:
    return tuple(sorted(p + q))


def _minus(g: Simplex, a: Simplex) -> Simplex:
    sa = set(a)
    return tuple(v for v in g if v not in sa)


def _contains(g: Simplex, a: Simplex) -> bool:
    if len(a) > len(g):
        return False
    sg = set(g)
    return all(v in sg for v in a)


class Complex:
    """An immutable Z2 chain: a finite set of generator simplexes."""

    __slots__ = ("_gens", "_hash", "_index", "_sorted")

    def __init__(self, generators: Iterable[Iterable[int]] = ()):
        acc: set[Simplex] = set()
        for g in generators:
            g = tuple(g)
            s = simplex(*g) if g else ()
            acc ^= {s}
        self._gens = frozenset(acc)
        self._hash = None
        self._index = None
        self._sorted = None

    @classmethod
    def _of(cls, gens) -> Complex:
        # Trusted constructor: gens already canonical, no duplicates.
        obj = cls.__new__(cls)
        obj._gens = gens if isinstance(gens, frozenset) else frozenset(gens)
        obj._hash = None
        obj._index = None
        obj._sorted = None
        return obj

    @classmethod
    def unit(cls) -> Complex:
        """The join unit: a complex whose only generator is the empty simplex."""
        return cls._of(frozenset({()}))

    @classmethod
    def from_simplex(cls, *labels: int) -> Complex:
        return cls._of(frozenset({simplex(*labels)}))

    @property
    def generators(self) -> frozenset:
        return self._gens

    def sorted_generators(self) -> tuple:
        """Generators in canonical order: by dimension, then lexicographically."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._gens, key=lambda s: (len(s), s)))
        return self._sorted

    def __iter__(self):
        return iter(self.sorted_generators())

    def __len__(self):
        return len(self._gens)

    def __bool__(self):
        return bool(self._gens)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._gens

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self._gens == other._gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._gens)
        return self._hash

    def __add__(self, other: Complex) -> Complex:
        return Complex._of(self._gens ^ other._gens)

    __sub__ = __add__  # -1 == 1 in Z2

    def __repr__(self):
        if not self._gens:
            return "Complex()"
        return "Complex(" + "+".join("(" + " ".join(map(str, g)) + ")" for g in self) + ")"

    @property
    def is_empty(self) -> bool:
        return not self._gens

    @property
    def has_unit(self) -> bool:
        """True if the empty simplex is a generator (see :func:`link`)."""
        return () in self._gens

    @property
    def dim(self) -> int:
        """Largest generator dimension; -1 for the zero chain."""
        return max((len(g) for g in self._gens), default=0) - 1

    def dims(self) -> set[int]:
        return {len(g) - 1 for g in self._gens}

    def vertex_star_index(self) -> dict[int, tuple]:
        """Map each vertex to the generators containing it (cached)."""
        if self._index is None:
            idx = defaultdict(list)
            for g in self._gens:
                for v in g:
                    idx[v].append(g)
            self._index = {v: tuple(gs) for v, gs in idx.items()}
        return self._index

    def vertices(self) -> frozenset:
        return frozenset(self.vertex_star_index())

    def max_label(self) -> int:
        return max(self.vertex_star_index(), default=0)

    def has_face(self, a: Simplex) -> bool:
        """Whether ``a`` is a face of some generator (the empty face never is)."""
        if not a:
            return False
        return any(_contains(g, a) for g in self.vertex_star_index().get(a[0], ()))

    def without(self, *gens: Simplex) -> Complex:
        return Complex._of(self._gens - set(gens))


def as_simplex(a) -> Simplex:
    if isinstance(a, int):
        return simplex(a)
    return simplex(*a)


def boundary_of_simplex(s: Simplex) -> Complex:
    return Complex._of(frozenset(facets(s)))


def boundary(K: Complex) -> Complex:
    """Z2 boundary: each n-simplex contributes its n+1 facets; pairs cancel.

    Vertices (and the join unit) have zero boundary.
    """
    acc: set[Simplex] = set()
    for g in K.generators:
        for f in facets(g):
            if f in acc:
                acc.remove(f)
            else:
                acc.add(f)
    return Complex._of(frozenset(acc))


def is_closed(K: Complex) -> bool:
    return boundary(K).is_empty


def join(K: Complex, L: Complex) -> Complex:
    """Join of vertex-disjoint complexes; bilinear, so the zero chain annihilates."""
    shared = K.vertices() & L.vertices()
    if shared:
        raise SharedVertexError(f"join operands share vertices {sorted(shared)}")
    return Complex._of(frozenset(_union(q, p) for q in K.generators for p in L.generators))


def _cone(v: int, K: Complex) -> Complex:
    return Complex._of(frozenset(_union((v,), g) for g in K.generators))


def star(a, K: Complex) -> Complex:
    """Generators of ``K`` containing ``a``."""
    a = as_simplex(a)
    return Complex._of(frozenset(g for g in K.vertex_star_index().get(a[0], ()) if _contains(g, a)))


def link(a, K: Complex) -> Complex:
    """``{g - a : a ⊆ g ∈ K}``.

    If ``a`` is itself a generator the result contains the empty simplex, so
    that ``join(a, link(a, K)) == star(a, K)`` holds without special cases.
    """
    a = as_simplex(a)
    return Complex._of(frozenset(_minus(g, a) for g in star(a, K).generators))


def residual(a, K: Complex) -> Complex:
    """Generators of ``K`` not containing ``a``; ``star + residual == K``."""
    return K + star(a, K)


def is_uniform(K: Complex) -> bool:
    return len(K.dims()) <= 1


@dataclass(frozen=True)
class FaceLattice:
    """All nonempty faces of a complex, grouped by dimension."""

    faces: dict

    def counts(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in sorted(self.faces.items())}

    def __getitem__(self, d: int) -> frozenset:
        return self.faces.get(d, frozenset())

    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces.get(len(s) - 1, ())

    @property
    def dim(self) -> int:
        return max(self.faces, default=-1)

    def all_faces(self) -> Iterator[Simplex]:
        for d in sorted(self.faces):
            yield from sorted(self.faces[d])


def face_lattice(K: Complex) -> FaceLattice:
    acc = defaultdict(set)
    for g in K.generators:
        for f in faces(g):
            acc[len(f) - 1].add(f)
    return FaceLattice({d: frozenset(fs) for d, fs in sorted(acc.items())})


def euler_characteristic(K: Complex) -> int:
    return sum((-1) ** d * n for d, n in face_lattice(K).counts().items())


def vertices(K: Complex) -> frozenset:
    return K.vertices()


def max_label(K: Complex) -> int:
    return K.max_label()


def is_facet_connected(K: Complex) -> bool:
    """Whether the generators form one class under sharing a codimension-one face."""
    gens = list(K.generators)
    if len(gens) <= 1:
        return True
    owners = defaultdict(list)
    for i, g in enumerate(gens):
        for f in facets(g):
            owners[f].append(i)
    seen = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for f in facets(gens[i]):
            for j in owners[f]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
    return len(seen) == len(gens)


def components(K: Complex) -> list[frozenset]:
    """Vertex sets of the connected components of the underlying complex."""
    parent = {v: v for v in K.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in K.generators:
        for v in g[1:]:
            ra, rb = find(g[0]), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = defaultdict(set)
    for v in parent:
        groups[find(v)].add(v)
    return [frozenset(groups[r]) for r in sorted(groups)]


def simplex_boundary(n: int, offset: int = 0) -> Complex:
    """``∂(1 2 ... n+2)``, the boundary of the (n+1)-simplex (an n-sphere)."""
    return boundary_of_simplex(tuple(range(1 + offset, n + 3 + offset)))


def full_simplex(n: int, offset: int = 0) -> Complex:
    """``(1 2 ... n+1)``, the n-simplex (an n-ball)."""
    return Complex._of(frozenset({tuple(range(1 + offset, n + 2 + offset))}))


def fmt_simplex(s: Simplex) -> str:
    return "(" + " ".join(map(str, s)) + ")"
