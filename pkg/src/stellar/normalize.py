"""Rewrite a connected 3-complex into a cone ``a * (S/≃)`` over a glued 2-complex.

The loop starts by starring one generator ``g`` at a fresh apex ``a``; from
then on every step absorbs one residual generator ``p`` into the star of
``a`` through a face it shares with the apex link:

* if the vertex of ``p`` opposite the shared face is new to the link, a
  subdivide/weld pair (a 2-3 flip) moves ``p`` into the star;
* otherwise ``p`` is first replaced by a copy whose opposite vertex is a fresh
  label ``d``, the flip is applied to the copy, and ``d`` is declared
  equivalent to the original vertex.

The link is kept unglued; the equivalence is carried alongside it.  A face of
``p`` counts as shared when it is the image of a link triangle under the
equivalence, so generators glued through earlier copies are still reachable.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from .complex import (
    Complex,
    Simplex,
    _cone,
    boundary_of_simplex,
    facets,
    fmt_simplex,
    is_closed,
    is_facet_connected,
    is_uniform,
    link,
    residual,
)
from .errors import (
    DisconnectedError,
    EmptyComplexError,
    NotUniform3Error,
    RegularityBrokenError,
    StalledNoSharedFacetError,
)
from .homology import homology_z2, identification_complex
from .moves import MoveRecord, MoveTrace, apply_move, subdivide
from .quotient import RegularityReport, VertexEquivalence, check_regular, cone_boundary_check

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepRecord:
    index: int
    p: Simplex
    facet: Simplex            # face of p shared with the link (up to ≃)
    link_face: Simplex        # the link triangle it is glued to
    branch: int
    opposite: int             # vertex of p off the shared face
    fresh: int | None         # d for branch 2
    transient: int            # b of the subdivide/weld pair
    replacement: Simplex      # what p became before the flip (== p if unchanged)
    shared_faces: int         # literal faces of the replacement already in the link
    trace_index: int          # position of this step's first move in the trace

    def line(self) -> str:
        fresh = "-" if self.fresh is None else str(self.fresh)
        parts = [
            f"step {self.index}",
            f"p={fmt_simplex(self.p)}",
            f"facet={fmt_simplex(self.facet)}",
            f"branch={self.branch}",
            f"fresh={fresh}",
            f"b={self.transient}",
        ]
        if self.replacement != self.p:
            parts.append(f"replace={fmt_simplex(self.p)}->{fmt_simplex(self.replacement)}")
        if self.link_face != self.facet:
            parts.append(f"glued_to={fmt_simplex(self.link_face)}")
        if self.shared_faces > 1:
            parts.append(f"multi_facet={self.shared_faces}")
        return " ".join(parts)


@dataclass
class ConeTriangulation:
    apex: int
    S: Complex
    eq: VertexEquivalence
    report: RegularityReport
    trace: MoveTrace
    steps: list = field(default_factory=list)
    start: Simplex = ()

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def cone(self) -> Complex:
        """The unglued final complex ``apex * S``."""
        return _cone(self.apex, self.S)

    def summary(self, closed: bool | None = None) -> str:
        classes = self.eq.classes()
        text = f"S: {len(self.S)} generators, {len(self.report.matched_pairs)} matched pairs"
        if classes:
            text += ", classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in classes)
        if closed is False:
            text += " (input not closed)"
        return text


def _state_dump(N: Complex, a: int, eq: VertexEquivalence) -> str:
    return (f"apex link: {link((a,), N)!r}\nresidual: {residual((a,), N)!r}\n"
            f"equivalence: {eq!r}")


def _check_input(M: Complex) -> None:
    if M.is_empty:
        raise EmptyComplexError("input complex is empty")
    if not is_uniform(M) or M.dim != 3:
        raise NotUniform3Error("input must be a uniform 3-dimensional complex")
    if not is_facet_connected(M):
        raise DisconnectedError("generators are not connected through shared 2-simplexes")


def _select(R: Complex, Lk: Complex, eq: VertexEquivalence):
    by_image = defaultdict(list)
    for t in Lk:
        by_image[eq.map_simplex(t)].append(t)
    for p in R:
        for f in facets(p):
            ts = by_image.get(f)
            if ts:
                t = f if f in ts else min(ts)
                return p, f, t
    return None


def normalize(M: Complex, validate: bool = False) -> ConeTriangulation:
    """Run the absorption loop on ``M``; see the module docstring.

    With ``validate`` each step's chain formula
    ``a * (lk + ∂g') + Q - p`` is checked against the explicit
    subdivide/weld replay.
    """
    _check_input(M)
    g = M.sorted_generators()[0]
    a = M.max_label() + 1
    moves = [MoveRecord.subdivide(g, a)]
    N = subdivide(M, g, a)
    eq = VertexEquivalence()
    steps = []
    k = 0
    while True:
        Lk = link((a,), N)
        R = N + _cone(a, Lk)
        if R.is_empty:
            break
        k += 1
        choice = _select(R, Lk, eq)
        if choice is None:
            raise StalledNoSharedFacetError(k, _state_dump(N, a, eq))
        p, f, t = choice
        (opp,) = [v for v in p if v not in f]
        cls = eq.find(opp)
        in_link = any(eq.find(v) == cls for v in Lk.vertices())
        if in_link:
            branch, x = 2, N.max_label() + 1
            fresh = x
        else:
            branch, x, fresh = 1, opp, None
        g2 = tuple(sorted(t + (x,)))
        shared = sum(1 for h in facets(g2) if h in Lk)
        N_sub = N.without(p) + Complex._of(frozenset({g2})) if g2 != p else N
        b = N_sub.max_label() + 1
        step_moves = [MoveRecord.subdivide(t, b), MoveRecord.weld((a, x), b)]
        chain_next = _cone(a, Lk + boundary_of_simplex(g2)) + R.without(p)
        if validate:
            replayed = N_sub
            for mv in step_moves:
                replayed = apply_move(replayed, mv)
            if replayed != chain_next:
                raise AssertionError(f"step {k}: chain formula and move replay disagree")
        if branch == 2:
            eq.merge(opp, x)
        steps.append(StepRecord(k, p, f, t, branch, opp, fresh, b, g2, shared, len(moves)))
        if shared > 1:
            log.info("step %d: %s shares %d faces with the apex link", k, fmt_simplex(g2), shared)
        moves.extend(step_moves)
        N = chain_next
        report = check_regular(link((a,), N), eq)
        if not report.regular:
            raise RegularityBrokenError(k, report, _state_dump(N, a, eq))
    S = link((a,), N)
    return ConeTriangulation(a, S, eq, check_regular(S, eq), MoveTrace(M, tuple(moves)), steps, g)


def replay_normalization(M: Complex, ct: ConeTriangulation) -> tuple[Complex, VertexEquivalence]:
    """Rebuild ``(apex * S, eq)`` from ``M``, the trace, and the recorded replacements."""
    moves = ct.trace.moves
    at = {s.trace_index: s for s in ct.steps}
    N = M
    eq = VertexEquivalence()
    for i, mv in enumerate(moves):
        s = at.get(i)
        if s is not None:
            if s.replacement != s.p:
                N = N.without(s.p) + Complex._of(frozenset({s.replacement}))
            if s.branch == 2:
                eq.merge(s.opposite, s.fresh)
        N = apply_move(N, mv)
    return N, eq


@dataclass
class ConeVerification:
    ok: bool
    diagnostics: list

    def __bool__(self):
        return self.ok


def verify_cone(ct: ConeTriangulation, M: Complex) -> ConeVerification:
    """Re-check a normalization result against its input."""
    diags = []
    ok = True

    def fail(msg):
        nonlocal ok
        ok = False
        diags.append(msg)

    a, S = ct.apex, ct.S
    if a in S.vertices():
        fail("apex is a vertex of S")
    if not (is_uniform(S) and S.dim == 2):
        fail("S is not a uniform 2-complex")
    try:
        N, eq = replay_normalization(M, ct)
    except Exception as exc:  # any replay failure is a verdict, not a crash
        fail(f"replay failed: {exc}")
    else:
        if N != ct.cone():
            fail("replay does not reproduce apex * S")
        if residual((a,), N):
            fail("some generator misses the apex")
        if eq != ct.eq:
            fail("replay does not reproduce the equivalence")
    report = check_regular(S, ct.eq)
    if not report.regular:
        fail(f"equivalence not regular on S ({report.summary()})")
        return ConeVerification(ok, diags)
    closed = is_closed(M)
    matched = cone_boundary_check(a, S, ct.eq)
    if closed and not matched:
        fail(f"unmatched generators: {len(report.unmatched)}")
    elif not closed:
        if matched:
            fail("input has boundary but every generator of S is matched")
        else:
            diags.append(f"open cone / ball: {len(report.unmatched)} unmatched generators")
    glued = identification_complex(a, S, ct.eq).betti()
    original = homology_z2(M)
    if glued != original:
        fail(f"Betti numbers differ: input {original}, glued cone {glued}")
    if ok:
        diags.append(f"Betti numbers agree: {original}")
    return ConeVerification(ok, diags)


def absorbed_images(ct: ConeTriangulation) -> Complex:
    """Generators absorbed by the loop, mapped back through ``eq``."""
    return Complex._of(frozenset([ct.start] + [ct.eq.map_simplex(s.replacement) for s in ct.steps]))
