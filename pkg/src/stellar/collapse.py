"""Barycentric subdivision and greedy free-face collapsing."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import permutations

from .complex import Complex, Simplex, face_lattice, faces, facets, is_uniform
from .errors import NotUniformError
from .moves import subdivide


def _face_order(K: Complex) -> list[Simplex]:
    lat = face_lattice(K)
    order = []
    for d in sorted(lat.faces, reverse=True):
        order.extend(sorted(lat.faces[d]))
    return order


def barycentric(K: Complex, validate: bool = False) -> Complex:
    """Barycentric subdivision as the flag complex of the face poset.

    Every face gets a fresh label, starting at ``max_label + 1`` and handed out
    by decreasing dimension, then lexicographically.  With ``validate`` the
    result is also built as a sequence of starrings at every face in that
    order, and the two constructions must agree.
    """
    if not is_uniform(K):
        raise NotUniformError("barycentric subdivision needs a uniform complex")
    order = _face_order(K)
    base = K.max_label() + 1
    label = {f: base + i for i, f in enumerate(order)}
    gens = set()
    for g in K.generators:
        # A maximal flag of g is a permutation: drop vertices one at a time.
        for perm in permutations(g):
            chain = [label[tuple(sorted(perm[i:]))] for i in range(len(perm))]
            gens.add(tuple(sorted(chain)))
    result = Complex._of(frozenset(gens))
    if validate:
        starred = K
        for f in order:
            starred = subdivide(starred, f, label[f])
        if starred != result:
            raise AssertionError("flag construction and starring sequence disagree")
    return result


@dataclass
class CollapseResult:
    collapsed: bool
    log: list = field(default_factory=list)  # (free face, its unique coface)
    core: Complex = field(default_factory=Complex)
    free_faces: int = 0
    remaining_faces: int = 0

    @property
    def status(self) -> str:
        return "Collapsed" if self.collapsed else "Stuck"


def collapse(K: Complex, budget: int | None = None) -> CollapseResult:
    """Greedy elementary collapses on the face lattice of ``K``.

    At each step the free face with the smallest key ``(-dim, vertices)`` is
    removed together with its unique coface.  Success means one vertex is
    left.  ``budget`` caps the number of elementary collapses.
    """
    if not is_uniform(K):
        raise NotUniformError("collapse needs a uniform complex")
    lat = face_lattice(K)
    alive = set(lat.all_faces())
    up = {f: set() for f in alive}
    for f in alive:
        for h in facets(f):
            up[h].add(f)

    def is_free(f):
        if f not in alive or len(up[f]) != 1:
            return False
        (g,) = up[f]
        return not up[g]

    heap = [(-(len(f) - 1), f) for f in alive if is_free(f)]
    heapq.heapify(heap)
    log = []
    while heap and (budget is None or len(log) < budget):
        _, f = heapq.heappop(heap)
        if not is_free(f):
            continue
        (g,) = up[f]
        for c in (f, g):
            alive.discard(c)
            for h in facets(c):
                up[h].discard(c)
        log.append((f, g))
        for h in faces(g):
            if h in alive:
                for c in (h, *facets(h)):
                    if is_free(c):
                        heapq.heappush(heap, (-(len(c) - 1), c))
    free_left = sum(1 for f in alive if is_free(f))
    maximal = [f for f in alive if not up[f]]
    collapsed = len(alive) == 1 and len(next(iter(alive))) == 1
    return CollapseResult(collapsed, log, Complex._of(frozenset(maximal)), free_left, len(alive))
