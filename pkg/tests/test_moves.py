from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stellar.complex import (
    Complex,
    boundary_of_simplex,
    euler_characteristic,
    is_closed,
    join,
)
from stellar.errors import (
    AbsentSimplexError,
    AbsentVertexError,
    InvalidAtError,
    NotFactorableError,
    NotInjectiveError,
    SimplexPresentError,
    VertexCollisionError,
)
from stellar.homology import homology_z2
from stellar.moves import (
    MoveRecord,
    MoveTrace,
    enumerate_moves,
    factor_link,
    relabel,
    replay,
    subdivide,
    weld,
)

from support import C, brute_factorizations, complexes, random_stellar, small_links, sphere

D3 = sphere(2)
SUB12 = C((1, 3, 5), (1, 4, 5), (2, 3, 5), (2, 4, 5), (1, 3, 4), (2, 3, 4))


def test_subdivide_examples():
    assert subdivide(C((1, 2, 3, 4)), (1, 2, 3, 4), 5) == C(
        (1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5))
    assert subdivide(D3, (1, 2), 5) == SUB12
    with pytest.raises(VertexCollisionError):
        subdivide(D3, (1, 2), 3)
    with pytest.raises(AbsentSimplexError):
        subdivide(D3, (1, 7), 8)


def test_subdivide_at_vertex_relabels():
    assert subdivide(D3, (1,), 9) == relabel(D3, {1: 9})


def test_weld_examples():
    assert weld(SUB12, (1, 2), 5) == D3
    with pytest.raises(SimplexPresentError):
        weld(D3, (1, 2), 1)
    with pytest.raises(AbsentVertexError):
        weld(D3, (1, 2), 9)
    with pytest.raises(NotFactorableError):
        weld(SUB12, (1, 2, 3, 4), 5)


def test_relabel_examples():
    assert relabel(D3, {1: 4, 4: 1}) == D3
    assert relabel(C((1, 2, 3)), {1: 7}) == C((2, 3, 7))
    with pytest.raises(NotInjectiveError):
        relabel(C((1, 2)), {1: 2})


def test_factor_link_examples():
    L = join(C((1,), (2,)), C((3,), (4,)))
    found = factor_link(L)
    assert ((1, 2), C((3,), (4,))) in found
    assert ((3, 4), C((1,), (2,))) in found
    (A, B), = [ab for ab in factor_link(boundary_of_simplex((1, 2, 3))) if ab[0] == (1, 2, 3)]
    assert B.has_unit and len(B) == 1
    assert factor_link(C((1,), (2,), (3,))) == []


def test_factor_link_excludes_present_faces():
    L = join(C((1,), (2,)), C((3,), (4,)))
    assert [A for A, _ in factor_link(L, exclude=C((1, 2, 9)))] == [(3, 4)]


def test_enumerate_moves_examples():
    assert MoveRecord.subdivide((1, 2, 3), 4) in enumerate_moves(C((1, 2, 3)))
    assert MoveRecord.weld((1, 2), 5) in enumerate_moves(SUB12)
    assert enumerate_moves(Complex()) == []


def test_enumerate_moves_all_valid_and_sorted():
    moves = enumerate_moves(SUB12)
    assert moves == enumerate_moves(SUB12)
    for mv in moves:
        K = subdivide(SUB12, mv.simplex, mv.vertex) if mv.kind == "S" else weld(SUB12, mv.simplex, mv.vertex)
        assert K


def test_replay_examples():
    K = D3
    assert replay(MoveTrace(K, (MoveRecord.subdivide((1, 2), 5), MoveRecord.weld((1, 2), 5)))) == K
    assert replay(MoveTrace(K, ())) == K
    with pytest.raises(InvalidAtError) as info:
        replay(MoveTrace(K, (MoveRecord.subdivide((1, 2), 5), MoveRecord.subdivide((1, 3), 5))))
    assert info.value.index == 2 and isinstance(info.value.cause, VertexCollisionError)


def test_move_record_text_and_inverse():
    m = MoveRecord.subdivide((1, 2), 5)
    assert str(m) == "S 5 ; 1 2"
    assert str(m.inverse()) == "W 5 ; 1 2"
    assert m.inverse().inverse() == m


@settings(max_examples=150, deadline=None)
@given(complexes(max_gens=12, max_dim=3, max_label=8, uniform=True))
def test_factor_link_matches_brute_force(K):
    for L in small_links(K):
        assert set(factor_link(L)) == brute_factorizations(L)


def test_factor_link_matches_brute_force_on_stellar_links():
    rng = random.Random(7)
    for _ in range(40):
        K = random_stellar(rng, sphere(rng.choice([2, 3])), rng.randint(0, 4))
        if len(K.vertices()) > 8:
            continue
        for L in small_links(K):
            assert set(factor_link(L)) == brute_factorizations(L)


def _random_face(rng, K):
    g = rng.choice(sorted(K.generators))
    return tuple(sorted(rng.sample(g, rng.randint(1, len(g)))))


@settings(max_examples=200, deadline=None)
@given(complexes(max_gens=15), st.randoms(use_true_random=False))
def test_weld_inverts_subdivide(K, rng):
    if K.is_empty:
        return
    A = _random_face(rng, K)
    a = K.max_label() + rng.randint(1, 3)
    S = subdivide(K, A, a)
    assert weld(S, A, a) == K
    assert is_closed(S) == is_closed(K)
    assert euler_characteristic(S) == euler_characteristic(K)
    assert homology_z2(S) == homology_z2(K)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_weld_preserves_invariants(seed):
    rng = random.Random(seed)
    K = random_stellar(rng, sphere(rng.choice([1, 2, 3])), 6)
    for w in enumerate_moves(K):
        if w.kind != "W":
            continue
        K2 = weld(K, w.simplex, w.vertex)
        assert subdivide(K2, w.simplex, w.vertex) == K
        assert is_closed(K2) == is_closed(K)
        assert euler_characteristic(K2) == euler_characteristic(K)
        assert homology_z2(K2) == homology_z2(K)


@settings(max_examples=100, deadline=None)
@given(complexes(max_gens=10), st.permutations(range(1, 10)))
def test_relabel_preserves_invariants(K, perm):
    mapping = dict(zip(range(1, 10), perm))
    R = relabel(K, mapping)
    assert len(R) == len(K)
    assert is_closed(R) == is_closed(K)
    assert euler_characteristic(R) == euler_characteristic(K)
    assert relabel(R, {v: k for k, v in mapping.items()}) == K
