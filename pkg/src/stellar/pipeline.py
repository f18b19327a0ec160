"""Desk-scale run of the sphere argument on one input.

Stages: normalize, recognize the base as a 2-sphere, check the matching,
pick a base generator, build the glued carrier without it, subdivide the
carrier barycentrically, and collapse.  Each stage records whether the
property it tests held on this input.  Nothing here certifies anything
beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .collapse import collapse
from .complex import Complex, fmt_simplex, is_closed
from .errors import StellarError
from .homology import homology_z2, identification_complex
from .normalize import ConeTriangulation, normalize, verify_cone
from .quotient import cone_boundary_check
from .recognize import NO, SPHERE, YES, Verdict, recognize

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
H1_PROXY_LABEL = "H₁ proxy (b₁ = 0 over Z2 plus connectivity; necessary, not sufficient for simple connectivity)"


class PipelineStageError(StellarError):
    def __init__(self, stage: int, name: str, cause: Exception):
        self.stage = stage
        self.name = name
        self.cause = cause
        super().__init__(f"stage {stage} ({name}) failed: {type(cause).__name__}: {cause}")


@dataclass
class StageResult:
    index: int
    name: str
    verdict: str
    detail: str
    certificates: tuple = ()


@dataclass
class PipelineReport:
    closed: bool
    generators: int
    stages: list = field(default_factory=list)
    h1_proxy: str = ""
    notes: list = field(default_factory=list)
    cone: ConeTriangulation | None = None
    sphere_verdict: Verdict | None = None
    barycentric: Complex | None = None

    @property
    def passed(self) -> bool:
        return all(s.verdict == PASS for s in self.stages)

    def stage(self, name: str) -> StageResult:
        return next(s for s in self.stages if s.name == name)

    def to_text(self) -> str:
        state = "closed" if self.closed else "not closed"
        lines = [f"input: {self.generators} generators, {state}"]
        for s in self.stages:
            lines.append(f"stage {s.index} {s.name}: {s.verdict} - {s.detail}")
        lines.append(f"{H1_PROXY_LABEL}: {self.h1_proxy}")
        lines.extend(f"note: {n}" for n in self.notes)
        held = sum(s.verdict == PASS for s in self.stages)
        lines.append(f"summary: {held}/{len(self.stages)} stage properties held on this input")
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        """Tab-separated ``key=value`` lines, one per stage plus the proxy line."""
        out = []
        for s in self.stages:
            cert = ",".join(s.certificates) or "-"
            out.append(f"stage={s.index}\tname={s.name}\tverdict={s.verdict}\tcert={cert}\tdetail={s.detail}")
        out.append(f"stage=-\tname=h1_proxy\tverdict=proxy\tcert=-\tdetail={self.h1_proxy}")
        return "\n".join(out) + "\n"


def _betti_str(b) -> str:
    return "(" + ",".join(map(str, b)) + ")"


def poincare_pipeline(M: Complex, budget: int = 1000, seed: int = 0,
                      collapse_budget: int | None = None, validate: bool = False) -> PipelineReport:
    report = PipelineReport(closed=is_closed(M), generators=len(M))
    add = report.stages.append

    # 1. normal form a * (S/~)
    try:
        ct = normalize(M, validate=validate)
    except StellarError as exc:
        raise PipelineStageError(1, "normalize", exc) from exc
    report.cone = ct
    check = verify_cone(ct, M)
    add(StageResult(1, "normalize", PASS if check.ok else FAIL,
                    f"{ct.iterations} iterations, {ct.summary()}; " + "; ".join(check.diagnostics),
                    ("S.cplx", "eq.equiv", "normalize.trace", "steps.log")))

    # 2. the unglued base is a 2-sphere
    v = recognize(ct.S, SPHERE, budget, seed)
    report.sphere_verdict = v
    add(StageResult(2, "base_sphere", {YES: PASS, NO: FAIL}.get(v.status, INCONCLUSIVE), v.describe(),
                    ("sphere.trace",) if v.status == YES else ()))

    # 3. every base generator has exactly one partner
    matched = cone_boundary_check(ct.apex, ct.S, ct.eq)
    rep = ct.report
    add(StageResult(3, "matching", PASS if matched else FAIL,
                    f"{len(rep.matched_pairs)} matched pairs, {len(rep.unmatched)} unmatched generators"))

    # 4. remove one generator
    g = ct.S.sorted_generators()[0]
    partner = rep.partner().get(g)
    detail = f"g={fmt_simplex(g)}, partner=" + (fmt_simplex(partner) if partner else "none")
    add(StageResult(4, "remove_generator", PASS, detail))

    # 5. carrier a * (S - g) glued through the equivalence
    carrier = identification_complex(ct.apex, ct.S.without(g), ct.eq)
    betti = carrier.betti()
    connected = bool(betti) and betti[0] == 1
    h1 = betti[1] if len(betti) > 1 else 0
    report.h1_proxy = f"b₁={h1}"
    ok5 = connected and h1 == 0
    add(StageResult(5, "carrier", PASS if ok5 else FAIL,
                    f"betti={_betti_str(betti)}, connected={'yes' if connected else 'no'}, "
                    f"chi={carrier.euler_characteristic()}, cells={sum(carrier.counts().values())}"))
    if partner is not None:
        alt = identification_complex(ct.apex, ct.S.without(g, partner), ct.eq).betti()
        report.notes.append(f"alternative carrier without g and its partner: betti={_betti_str(alt)}")

    # 6. barycentric subdivision of the carrier
    bary = carrier.barycentric()
    report.barycentric = bary
    bb = homology_z2(bary)
    add(StageResult(6, "barycentric", PASS if bb == betti else FAIL,
                    f"{len(bary)} generators, {len(bary.vertices())} vertices, betti={_betti_str(bb)}"))

    # 7. collapse; a stuck greedy run is not a refutation
    res = collapse(bary, collapse_budget)
    if res.collapsed:
        add(StageResult(7, "collapse", PASS, f"collapsed to a point in {len(res.log)} elementary collapses"))
    else:
        add(StageResult(7, "collapse", INCONCLUSIVE,
                        f"stuck after {len(res.log)} collapses, {res.remaining_faces} faces left, "
                        f"{res.free_faces} free"))
    return report
