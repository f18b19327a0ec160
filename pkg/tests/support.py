from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from stellar.complex import Complex, boundary_of_simplex, face_lattice, join, link, simplex, simplex_boundary
from stellar.moves import available_welds, subdivide, weld


def C(*gens) -> Complex:
    """Shorthand: ``C((1, 2, 3), (2, 3, 4))``."""
    return Complex(gens)


@st.composite
def complexes(draw, max_gens=30, max_dim=4, max_label=9, uniform=False):
    dim = draw(st.integers(0, max_dim)) if uniform else None
    n = draw(st.integers(0, max_gens))
    gens = []
    for _ in range(n):
        d = dim if uniform else draw(st.integers(0, max_dim))
        labels = draw(st.sets(st.integers(1, max_label), min_size=d + 1, max_size=d + 1))
        if len(labels) == d + 1:
            gens.append(tuple(sorted(labels)))
    return Complex(gens)


def random_complex(rng: random.Random, max_gens=30, max_dim=4, max_label=9) -> Complex:
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        d = rng.randint(0, max_dim)
        gens.append(tuple(sorted(rng.sample(range(1, max_label + 1), d + 1))))
    return Complex(gens)


def random_stellar(rng: random.Random, base: Complex, n_moves: int) -> Complex:
    """Apply up to ``n_moves`` random subdivisions and welds to ``base``."""
    K = base
    for _ in range(n_moves):
        welds = available_welds(K)
        if welds and rng.random() < 0.35:
            w = rng.choice(welds)
            K = weld(K, w.simplex, w.vertex)
            continue
        g = rng.choice(sorted(K.generators))
        k = rng.randint(1, len(g))
        A = simplex(*rng.sample(g, k))
        K = subdivide(K, A, K.max_label() + 1)
    return K


def sphere(n: int) -> Complex:
    return simplex_boundary(n)


def brute_factorizations(L: Complex) -> set:
    """Every (A, B) with ∂A * B == L, A a simplex on L's labels of dim >= 1."""
    out = set()
    verts = sorted(L.vertices())
    for k in range(2, len(verts) + 1):
        for A in itertools.combinations(verts, k):
            Aset = set(A)
            bs = set()
            ok = True
            for g in L:
                if len(Aset & set(g)) != k - 1:
                    ok = False
                    break
                bs.add(tuple(v for v in g if v not in Aset))
            if not ok:
                continue
            B = Complex._of(frozenset(bs))
            if join(boundary_of_simplex(A), B) == L:
                out.add((A, B))
    return out


def small_links(K: Complex):
    for f in face_lattice(K).all_faces():
        L = link(f, K)
        if L and not L.has_unit:
            yield L
