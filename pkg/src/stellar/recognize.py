"""Stellar ball/sphere recognition and stellar-manifold checks.

Recognition is a bounded search, so verdicts are three-valued.  ``No`` is
only ever returned with an invariant mismatch (Euler characteristic or Z2
Betti numbers against the reference complex); ``Yes`` carries a move trace
that replays to the reference exactly; anything else is ``Unknown``.
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from dataclasses import dataclass, field

from .complex import (
    Complex,
    euler_characteristic,
    full_simplex,
    is_closed,
    is_uniform,
    link,
    residual,
    simplex_boundary,
    star,
)
from .errors import NotClosedError, NotUniformError
from .homology import homology_z2
from .moves import (
    MoveRecord,
    MoveTrace,
    available_welds,
    replay,
    subdivide,
    weld,
)

YES, NO, UNKNOWN = "Yes", "No", "Unknown"
BALL, SPHERE = "ball", "sphere"


def reference_complex(target: str, n: int) -> Complex:
    if target == BALL:
        return full_simplex(n)
    if target == SPHERE:
        return simplex_boundary(n)
    raise ValueError(f"unknown target {target!r}")


@dataclass
class Verdict:
    status: str
    target: str
    trace: MoveTrace | None = None
    witness: str = ""
    betti: tuple = ()
    reference_betti: tuple = ()
    moves_used: int = 0
    budget: int = 0
    restarts: int = 0

    @classmethod
    def yes(cls, trace: MoveTrace, target: str, **kw) -> Verdict:
        ref = reference_complex(target, trace.initial.dim)
        if replay(trace) != ref:
            raise AssertionError("certificate trace does not replay to the reference complex")
        return cls(YES, target, trace=trace, **kw)

    def __bool__(self):
        return self.status == YES

    def describe(self) -> str:
        if self.status == YES:
            return f"Yes ({self.target}, {len(self.trace)} moves)"
        if self.status == NO:
            return f"No ({self.target}): {self.witness}"
        return f"Unknown ({self.target}): budget {self.budget} exhausted after {self.restarts + 1} runs"


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _witness(betti, ref_betti, chi, ref_chi) -> str:
    parts = []
    for i in range(max(len(betti), len(ref_betti))):
        b = betti[i] if i < len(betti) else 0
        r = ref_betti[i] if i < len(ref_betti) else 0
        if b != r:
            parts.append(f"b{str(i).translate(_SUB)}={b} (expected {r})")
    if chi != ref_chi:
        parts.append(f"chi={chi} (expected {ref_chi})")
    return ", ".join(parts)


def _reached(K: Complex, target: str, n: int) -> bool:
    if target == BALL:
        return len(K) == 1
    return len(K) == n + 2 and len(K.vertex_star_index()) == n + 2


def _final_relabel(K: Complex) -> MoveRecord | None:
    mapping = {v: i for i, v in enumerate(sorted(K.vertices()), start=1)}
    if all(k == v for k, v in mapping.items()):
        return None
    return MoveRecord.relabel({k: v for k, v in mapping.items() if k != v})


def _weld_gain(K: Complex, mv: MoveRecord) -> int:
    deg = len(K.vertex_star_index()[mv.vertex])
    return deg - deg // len(mv.simplex)


class _Search:
    """One annealing run: greedy welds, and flip-like subdivide/weld pairs
    (chosen with a seeded, cooling softmax) when no weld is available."""

    def __init__(self, K, target, n, budget, rng, width=48, t0=1.5, cooling=0.93):
        self.K = K
        self.target = target
        self.n = n
        self.budget = budget
        self.rng = rng
        self.width = width
        self.temp = t0
        self.cooling = cooling
        self.moves: list[MoveRecord] = []
        self.seen = {K.generators}

    def run(self) -> bool:
        while len(self.moves) < self.budget:
            if _reached(self.K, self.target, self.n):
                return True
            welds = available_welds(self.K)
            if welds:
                self._apply(self._pick_weld(welds))
            elif not self._uphill():
                return False
        return _reached(self.K, self.target, self.n)

    def _apply(self, mv: MoveRecord) -> None:
        if mv.kind == "S":
            self.K = subdivide(self.K, mv.simplex, mv.vertex)
        else:
            self.K = weld(self.K, mv.simplex, mv.vertex)
        self.moves.append(mv)
        self.seen.add(self.K.generators)

    def _pick_weld(self, welds):
        scored = [(_weld_gain(self.K, w), w) for w in welds]
        best = max(s for s, _ in scored)
        top = [w for s, w in scored if s == best]
        fresh = [w for w in top if weld(self.K, w.simplex, w.vertex).generators not in self.seen]
        return self.rng.choice(fresh or top)

    def _uphill(self) -> bool:
        K = self.K
        cands = sorted({f for g in K.generators for f in _proper_faces(g)})
        self.rng.shuffle(cands)
        c = K.max_label() + 1
        options = []
        for A in cands[: self.width]:
            K1 = subdivide(K, A, c)
            region = {c} | set(star(A, K).vertex_star_index())
            for w in available_welds(K1, region):
                if w.vertex == c and w.simplex == A:
                    continue
                K2 = weld(K1, w.simplex, w.vertex)
                if K2.generators in self.seen:
                    continue
                touched = set(star((w.vertex,), K1).vertex_star_index()) - {w.vertex}
                follow = available_welds(K2, touched)
                gain = max((_weld_gain(K2, f) for f in follow), default=0)
                score = (len(K) - len(K2)) + 0.5 * min(gain, 4) + 0.1 * len(follow)
                options.append((score, A, w))
        if options:
            best = max(s for s, _, _ in options)
            weights = [math.exp((s - best) / max(self.temp, 1e-3)) for s, _, _ in options]
            _, A, w = self.rng.choices(options, weights=weights)[0]
            self.temp *= self.cooling
            self._apply(MoveRecord.subdivide(A, c))
            if len(self.moves) < self.budget:
                self._apply(w)
            return True
        if not cands:
            return False
        edges = [A for A in cands if len(A) == 2] or cands
        self._apply(MoveRecord.subdivide(self.rng.choice(edges), c))
        return True


def _proper_faces(g):
    for k in range(2, len(g)):
        yield from combinations(g, k)


def recognize(K: Complex, target: str = SPHERE, budget: int = 1000, seed: int = 0) -> Verdict:
    """Decide whether ``K`` is a stellar ball or sphere of its own dimension.

    The budget counts applied moves over all runs; the search restarts from
    ``K`` with a derived seed after each quarter of the budget.
    """
    target = target.lower()
    if K.is_empty:
        raise ValueError("cannot recognize the empty complex")
    if not is_uniform(K):
        raise NotUniformError("recognition needs a uniform complex")
    n = K.dim
    ref = reference_complex(target, n)
    betti, ref_betti = homology_z2(K), homology_z2(ref)
    chi, ref_chi = euler_characteristic(K), euler_characteristic(ref)
    common = dict(betti=betti, reference_betti=ref_betti, budget=budget)
    if betti != ref_betti or chi != ref_chi:
        return Verdict(NO, target, witness=_witness(betti, ref_betti, chi, ref_chi), **common)
    if target == SPHERE and not is_closed(K) or target == BALL and is_closed(K):
        return Verdict(NO, target, witness="boundary mismatch", **common)

    used = 0
    quarter = max(1, budget // 4)
    restart = 0
    while used < budget:
        rng = random.Random(seed * 1_000_003 + restart)
        run = _Search(K, target, n, min(quarter, budget - used), rng)
        ok = run.run()
        used += len(run.moves)
        if ok:
            moves = list(run.moves)
            rl = _final_relabel(run.K)
            if rl is not None:
                moves.append(rl)
            return Verdict.yes(MoveTrace(K, tuple(moves)), target, moves_used=used,
                               restarts=restart, **common)
        if not run.moves:
            break
        restart += 1
    return Verdict(UNKNOWN, target, moves_used=used, restarts=restart, **common)


@dataclass
class ManifoldVerdict:
    status: str
    per_vertex: dict = field(default_factory=dict)  # v -> (sphere verdict, ball verdict)

    def link_kind(self, v: int) -> str:
        sph, ball = self.per_vertex[v]
        if sph.status == YES:
            return SPHERE
        if ball.status == YES:
            return BALL
        if sph.status == NO and ball.status == NO:
            return "neither"
        return "unknown"

    def failures(self) -> dict:
        return {v: self.link_kind(v) for v in sorted(self.per_vertex)
                if self.link_kind(v) not in (BALL, SPHERE)}

    def __bool__(self):
        return self.status == YES


def is_stellar_manifold(M: Complex, budget: int = 1000, seed: int = 0) -> ManifoldVerdict:
    """Recognize every vertex link as a ball and as a sphere."""
    if not is_uniform(M):
        raise NotUniformError("manifold check needs a uniform complex")
    per = {}
    for v in sorted(M.vertices()):
        L = link((v,), M)
        per[v] = (recognize(L, SPHERE, budget, seed + v), recognize(L, BALL, budget, seed + v))
    out = ManifoldVerdict(YES, per)
    kinds = [out.link_kind(v) for v in per]
    if "neither" in kinds:
        out.status = NO
    elif "unknown" in kinds:
        out.status = UNKNOWN
    return out


def residual_manifold_check(M: Complex, i: int, budget: int = 1000, seed: int = 0) -> ManifoldVerdict:
    """Stellar-manifold check of ``Q(i, M)`` for a closed ``M``."""
    if not is_closed(M):
        raise NotClosedError("residual check requires a closed complex")
    return is_stellar_manifold(residual((i,), M), budget, seed)
