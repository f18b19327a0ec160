"""Z2 homology of simplicial complexes and of small regular cell complexes."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .complex import Complex, face_lattice, facets, faces
from .quotient import VertexEquivalence


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as int bitmask rows."""
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


@dataclass
class CellComplex:
    """Cells graded by dimension, each with its Z2 boundary (a list of cells
    one dimension down).  Cells are arbitrary hashable keys."""

    cells: dict
    bdry: dict

    def dim(self) -> int:
        return max((d for d, cs in self.cells.items() if cs), default=-1)

    def counts(self) -> dict[int, int]:
        return {d: len(cs) for d, cs in sorted(self.cells.items())}

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in self.counts().items())

    def betti(self) -> tuple[int, ...]:
        top = self.dim()
        if top < 0:
            return ()
        index = {d: {c: i for i, c in enumerate(sorted(self.cells.get(d, ()), key=repr))}
                 for d in range(top + 1)}
        ranks = [0] * (top + 2)
        for d in range(1, top + 1):
            rows = []
            low = index[d - 1]
            for c in index[d]:
                mask = 0
                for f in self.bdry.get(c, ()):
                    mask ^= 1 << low[f]
                rows.append(mask)
            ranks[d] = gf2_rank(rows)
        return tuple(len(index[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1))

    def is_connected(self) -> bool:
        b = self.betti()
        return bool(b) and b[0] == 1

    def face_poset(self) -> dict:
        """Cell -> set of all proper faces (transitive closure of the boundary)."""
        below: dict = {}
        for d in sorted(self.cells):
            for c in self.cells[d]:
                acc = set()
                for f in self.bdry.get(c, ()):
                    acc.add(f)
                    acc |= below[f]
                below[c] = acc
        return below

    def barycentric(self, first_label: int = 1) -> Complex:
        """Order complex of the face poset.

        Cells get labels in order of decreasing dimension, then ``repr``.
        Generators are the flags obtained by descending through boundaries from
        each maximal cell.  Meant for regular complexes, where this is the
        barycentric subdivision.
        """
        order = []
        for d in sorted(self.cells, reverse=True):
            order.extend(sorted(self.cells[d], key=repr))
        label = {c: first_label + i for i, c in enumerate(order)}
        has_coface = set()
        for c, fs in self.bdry.items():
            has_coface.update(fs)
        gens = set()

        def descend(c, chain):
            chain = chain + (label[c],)
            fs = self.bdry.get(c, ())
            if not fs:
                gens.add(tuple(sorted(chain)))
                return
            for f in fs:
                descend(f, chain)

        for c in order:
            if c not in has_coface:
                descend(c, ())
        return Complex._of(frozenset(gens))


def simplicial_cells(K: Complex) -> CellComplex:
    lat = face_lattice(K)
    cells = {d: set(fs) for d, fs in lat.faces.items()}
    bdry = {f: facets(f) for fs in lat.faces.values() for f in fs}
    return CellComplex(cells, bdry)


def homology_z2(K: Complex) -> tuple[int, ...]:
    """Betti numbers ``(b0, ..., b_dim)`` over Z2 (unreduced)."""
    return simplicial_cells(K).betti()


def identification_complex(apex: int, S: Complex, eq: VertexEquivalence) -> CellComplex:
    """The cone ``apex * S`` with the faces of the base glued through ``eq``.

    Base faces become their images under the vertex map (so matched faces
    coincide), while every cone cell ``apex * f`` stays distinct.  Requires
    ``eq`` to be injective on each generator of ``S``.
    """
    cells = defaultdict(set)
    bdry: dict = {}
    apex_cell = ("apex", apex)
    cells[0].add(apex_cell)
    bdry[apex_cell] = []
    base_faces = set()
    for g in S.generators:
        base_faces.update(faces(g))
    for f in base_faces:
        img = eq.map_simplex(f)
        if len(img) != len(f):
            raise ValueError(f"vertex map is not injective on face {f}")
        key = ("base", img)
        cells[len(img) - 1].add(key)
        bdry[key] = [("base", h) for h in facets(img)]
        cone = ("cone", f)
        cells[len(f)].add(cone)
        bdry[cone] = [key] + ([("cone", h) for h in facets(f)] if len(f) > 1 else [apex_cell])
    return CellComplex(dict(cells), bdry)

