"""Vertex equivalences, regularity, and quotient chains."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .complex import Complex, Simplex, boundary, join
from .errors import NotRegularError


class VertexEquivalence:
    """A partition of vertex labels with union-find semantics.

    The representative of a class is its smallest label.  Classes only ever
    grow; there is no split.  Instances are meant to be built by one writer
    and then only read.
    """

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        self._parent: dict[int, int] = {}
        for i, j in pairs:
            self.merge(i, j)

    def find(self, v: int) -> int:
        parent = self._parent
        root = v
        while parent.get(root, root) != root:
            root = parent[root]
        while v != root:
            parent[v], v = root, parent[v]
        return root

    __call__ = find

    def merge(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        lo, hi = min(ri, rj), max(ri, rj)
        self._parent[hi] = lo
        self._parent.setdefault(lo, lo)

    def equivalent(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def classes(self, nontrivial: bool = True) -> list[tuple[int, ...]]:
        groups = defaultdict(list)
        for v in list(self._parent):
            groups[self.find(v)].append(v)
        out = [tuple(sorted(g)) for g in groups.values()]
        if nontrivial:
            out = [c for c in out if len(c) > 1]
        return sorted(out)

    def pairs(self) -> list[tuple[int, int]]:
        """Merges that regenerate this partition: ``(rep, member)`` per member."""
        return [(c[0], v) for c in self.classes() for v in c[1:]]

    def map_simplex(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.find(v) for v in s}))

    def copy(self) -> VertexEquivalence:
        eq = VertexEquivalence()
        eq._parent = dict(self._parent)
        return eq

    def relabeled(self, mapping) -> VertexEquivalence:
        return VertexEquivalence((mapping.get(i, i), mapping.get(j, j)) for i, j in self.pairs())

    def __eq__(self, other):
        if not isinstance(other, VertexEquivalence):
            return NotImplemented
        return self.classes() == other.classes()

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.classes())
        return f"VertexEquivalence({body})"


@dataclass
class RegularityReport:
    condition_i_violations: list = field(default_factory=list)
    condition_ii_violations: list = field(default_factory=list)
    matched_pairs: list = field(default_factory=list)
    unmatched: list = field(default_factory=list)

    @property
    def regular(self) -> bool:
        return not self.condition_i_violations and not self.condition_ii_violations

    def partner(self) -> dict:
        out = {}
        for g, p in self.matched_pairs:
            out[g] = p
            out[p] = g
        return out

    def summary(self) -> str:
        if not self.regular:
            return (f"not regular: {len(self.condition_i_violations)} condition-(i) and "
                    f"{len(self.condition_ii_violations)} condition-(ii) violations")
        return f"regular: {len(self.matched_pairs)} matched pairs, {len(self.unmatched)} unmatched"


def check_regular(M: Complex, eq: VertexEquivalence) -> RegularityReport:
    """Test both conditions of a regular equivalence on the generators of ``M``.

    (i)  no generator has two equivalent vertices;
    (ii) each generator has at most one other generator whose vertices agree
         with its own class by class.  Generators with exactly one such
         partner are reported as matched pairs.
    """
    report = RegularityReport()
    by_image = defaultdict(list)
    for g in M:
        classes = defaultdict(list)
        for v in g:
            classes[eq.find(v)].append(v)
        for members in classes.values():
            if len(members) > 1:
                report.condition_i_violations.append((g, tuple(members[:2])))
        by_image[(len(g), tuple(sorted(classes)))].append(g)
    for key in sorted(by_image):
        group = by_image[key]
        if len(group) == 1:
            report.unmatched.append(group[0])
        elif len(group) == 2:
            report.matched_pairs.append((group[0], group[1]))
        else:
            for g in group:
                report.condition_ii_violations.append((g, [p for p in group if p != g]))
    return report


def image_chain(K: Complex, eq: VertexEquivalence) -> Complex:
    """Push a chain through the vertex map, summing mod 2; degenerate images drop."""
    acc = set()
    for g in K.generators:
        s = eq.map_simplex(g)
        if len(s) == len(g):
            acc ^= {s}
    return Complex._of(frozenset(acc))


def quotient(S: Complex, eq: VertexEquivalence) -> tuple[Complex, list]:
    """``S/≃`` as a Z2 chain together with the images cancelled by matching."""
    report = check_regular(S, eq)
    if not report.regular:
        raise NotRegularError(report.summary(), report)
    cancelled = sorted(eq.map_simplex(g) for g, _ in report.matched_pairs)
    return image_chain(S, eq), cancelled


def cone_boundary_check(a: int, S: Complex, eq: VertexEquivalence) -> bool:
    """Whether ``∂(a * (S/≃)) = 0``, i.e. every generator of ``S`` is matched."""
    if a in S.vertices():
        raise ValueError(f"apex {a} is a vertex of the base")
    chain, _ = quotient(S, eq)
    return boundary(join(Complex.from_simplex(a), chain)).is_empty
