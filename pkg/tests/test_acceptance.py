"""Acceptance criteria 1-10, each at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL - detail`` line.  Run with
``pytest tests/test_acceptance.py -v`` to see them inline, or run this
file directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import tempfile
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from stellar.cli import write_normalize_bundle
from stellar.collapse import barycentric, collapse
from stellar.complex import (
    boundary,
    euler_characteristic,
    full_simplex,
    link,
    residual,
    star,
)
from stellar.corpus import cone_over, load
from stellar.homology import homology_z2
from stellar.moves import factor_link, subdivide, weld
from stellar.normalize import normalize, verify_cone
from stellar.pipeline import H1_PROXY_LABEL, poincare_pipeline
from stellar.quotient import cone_boundary_check
from stellar.recognize import BALL, NO, SPHERE, YES, recognize

from support import brute_factorizations, random_complex, random_stellar, small_links, sphere

RESULTS: dict[int, tuple[bool, str]] = {}


def report(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line, flush=True)


def _random_face(rng, K):
    g = rng.choice(sorted(K.generators))
    return tuple(sorted(rng.sample(g, rng.randint(1, len(g)))))


def criterion_1() -> tuple[bool, str]:
    rng = random.Random(101)
    failures = 0
    for _ in range(1000):
        K = random_complex(rng, max_gens=30, max_dim=4)
        if not boundary(boundary(K)).is_empty:
            failures += 1
        probes = [(v,) for v in sorted(K.vertices())]
        if K:
            probes.append(_random_face(rng, K))
        for A in probes:
            if star(A, K) + residual(A, K) != K:
                failures += 1
    return failures == 0, f"1000 complexes, {failures} failures"


def criterion_2() -> tuple[bool, str]:
    rng = random.Random(202)
    failures = checked = 0
    while checked < 500:
        K = random_complex(rng, max_gens=30, max_dim=4)
        if K.is_empty:
            continue
        checked += 1
        A = _random_face(rng, K)
        a = K.max_label() + rng.randint(1, 3)
        S = subdivide(K, A, a)
        W = weld(S, A, a)
        inv = (euler_characteristic(K), homology_z2(K))
        if W != K:
            failures += 1
        for X in (S, W):
            if (euler_characteristic(X), homology_z2(X)) != inv:
                failures += 1
    return failures == 0, f"500 roundtrips, {failures} failures"


def criterion_3() -> tuple[bool, str]:
    rng = random.Random(303)
    seen = set()
    sources = []
    for _ in range(300):
        sources.append(random_complex(rng, max_gens=14, max_dim=3, max_label=8))
    for _ in range(120):
        K = random_stellar(rng, sphere(rng.choice([1, 2, 3])), rng.randint(0, 4))
        sources.append(K)
    sources += [load("torus7"), load("sixteen_cell"), load("mobius7"), sphere(3)]
    mismatches = 0
    for K in sources:
        if len(K.vertices()) > 8:
            continue
        for v in sorted(K.vertices()):
            L = link((v,), K)
            if not L or L.has_unit or L in seen:
                continue
            seen.add(L)
            if set(factor_link(L)) != brute_factorizations(L):
                mismatches += 1
        for L in small_links(K):
            if L in seen:
                continue
            seen.add(L)
            if set(factor_link(L)) != brute_factorizations(L):
                mismatches += 1
    return mismatches == 0, f"{len(seen)} distinct links, {mismatches} mismatches"


def criterion_4() -> tuple[bool, str]:
    M = sphere(3)
    ct = normalize(M, validate=True)  # raises if chain formula and replay ever disagree
    classes = ct.eq.classes()
    v = recognize(ct.S, SPHERE, budget=500, seed=0)
    checks = {
        "iterations == 4": ct.iterations == 4,
        "|S| == 12": len(ct.S) == 12,
        "one class of size 4": len(classes) == 1 and len(classes[0]) == 4,
        "6 matched pairs": len(ct.report.matched_pairs) == 6,
        "cone_boundary_check": cone_boundary_check(ct.apex, ct.S, ct.eq),
        "recognize(S) Yes": v.status == YES and v.moves_used <= 500,
        "verify_cone": bool(verify_cone(ct, M)),
    }
    bad = [k for k, ok in checks.items() if not ok]
    detail = (f"{ct.iterations} iterations, |S|={len(ct.S)}, classes={classes}, "
              f"{len(ct.report.matched_pairs)} pairs, S {v.describe()}, dual-form validation on")
    return not bad, detail + (f"; failed: {bad}" if bad else "")


def criterion_5() -> tuple[bool, str]:
    parts = []
    ok = True
    for name in ("boundary_simplex_4", "sixteen_cell"):
        ct = normalize(load(name))
        matched = not ct.report.unmatched and cone_boundary_check(ct.apex, ct.S, ct.eq)
        ok &= matched
        parts.append(f"{name}: {len(ct.report.matched_pairs)} pairs, {len(ct.report.unmatched)} unmatched")
    ball = normalize(full_simplex(3))
    ok &= len(ball.report.unmatched) >= 1 and not cone_boundary_check(ball.apex, ball.S, ball.eq)
    parts.append(f"(1 2 3 4): {len(ball.report.unmatched)} unmatched")
    return ok, "; ".join(parts)


def criterion_6() -> tuple[bool, str]:
    rng = random.Random(606)
    yes = no = total = 0
    for i in range(200):
        base = sphere(2) if i % 2 == 0 else sphere(3)
        K = random_stellar(rng, base, rng.randint(1, 15))
        v = recognize(K, SPHERE, budget=2000, seed=0)
        total += 1
        yes += v.status == YES
        no += v.status == NO
    rate = yes / total
    return no == 0 and rate >= 0.95, f"Yes rate {rate:.1%} ({yes}/{total}), No count {no}"


def criterion_7() -> tuple[bool, str]:
    t0 = time.perf_counter()
    torus = recognize(load("torus7"), SPHERE)
    t1 = time.perf_counter()
    mob = recognize(load("mobius7"), BALL)
    t2 = time.perf_counter()
    ok = (torus.status == NO and torus.betti[1] == 2 and t1 - t0 < 1.0
          and mob.status == NO and mob.betti[1] == 1 and t2 - t1 < 1.0)
    return ok, (f"torus: {torus.describe()} in {t1 - t0:.3f}s; "
                f"mobius: {mob.describe()} in {t2 - t1:.3f}s")


def criterion_8() -> tuple[bool, str]:
    a = collapse(barycentric(full_simplex(3)))
    b = collapse(barycentric(cone_over(sphere(2))))
    c = collapse(sphere(2))
    ok = a.collapsed and b.collapsed and c.status == "Stuck" and c.free_faces == 0
    return ok, (f"Br(1 2 3 4): {a.status} ({len(a.log)} collapses); "
                f"Br(cone): {b.status} ({len(b.log)} collapses); "
                f"boundary: {c.status}, {c.free_faces} free faces")


def criterion_9() -> tuple[bool, str]:
    parts = []
    ok = True
    for name in ("boundary_simplex_4", "sixteen_cell"):
        r = poincare_pipeline(load(name))
        text = r.to_text()
        proxy = any(line.startswith(H1_PROXY_LABEL) for line in text.splitlines())
        ok &= r.passed and len(r.stages) == 7 and proxy and "proxy" in H1_PROXY_LABEL
        held = sum(s.verdict == "pass" for s in r.stages)
        parts.append(f"{name}: {held}/7 pass, proxy line {'present' if proxy else 'missing'}")
    return ok, "; ".join(parts)


def _bundle(out: Path) -> None:
    ct = normalize(sphere(3), validate=True)
    (out / "c4").mkdir()
    write_normalize_bundle(out / "c4", ct)
    (out / "c4" / "sphere.txt").write_text(recognize(ct.S, SPHERE, 500, 0).describe() + "\n")
    for name in ("boundary_simplex_4", "sixteen_cell"):
        d = out / f"c9_{name}"
        d.mkdir()
        r = poincare_pipeline(load(name))
        (d / "report.txt").write_text(r.to_text())
        (d / "report.tsv").write_text(r.to_records())
        write_normalize_bundle(d, r.cone)


def criterion_10() -> tuple[bool, str]:
    with tempfile.TemporaryDirectory() as tmp:
        runs = [Path(tmp) / "run1", Path(tmp) / "run2"]
        for r in runs:
            r.mkdir()
            _bundle(r)
        files = sorted(p.relative_to(runs[0]) for p in runs[0].rglob("*") if p.is_file())
        other = sorted(p.relative_to(runs[1]) for p in runs[1].rglob("*") if p.is_file())
        differ = [str(f) for f in files if (runs[0] / f).read_bytes() != (runs[1] / f).read_bytes()]
        ok = files == other and not differ
    return ok, f"{len(files)} files compared, {len(differ)} differ"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    with capsys.disabled():
        print()
        report(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]()
        report(n, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
