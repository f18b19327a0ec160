from __future__ import annotations

import warnings

import pytest
from hypothesis import given, settings

from stellar.errors import ParseError
from stellar.formats import (
    DuplicateGeneratorWarning,
    format_complex,
    format_equivalence,
    format_trace,
    parse_complex,
    parse_equivalence,
    parse_trace,
)
from stellar.moves import MoveRecord
from stellar.quotient import VertexEquivalence

from support import C, complexes


def test_parse_complex_comments_and_order():
    K = parse_complex("# tetra\n2 1 3\n\n1 2 4\n")
    assert K == C((1, 2, 3), (1, 2, 4))
    assert format_complex(K) == "1 2 3\n1 2 4\n"


def test_parse_complex_errors_carry_line():
    with pytest.raises(ParseError) as info:
        parse_complex("1 2 3\n1 x 3\n")
    assert info.value.line == 2 and "line 2" in str(info.value)
    with pytest.raises(ParseError):
        parse_complex("1 1 2\n")


def test_duplicate_generators_cancel_with_warning():
    with pytest.warns(DuplicateGeneratorWarning):
        assert parse_complex("1 2\n2 1\n").is_empty


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_complex_roundtrip(K):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_complex(format_complex(K)) == K


def test_equivalence_roundtrip():
    eq = VertexEquivalence([(9, 5), (7, 5), (2, 3)])
    text = format_equivalence(eq)
    assert text == "2 3\n5 7\n5 9\n"
    assert parse_equivalence("# merges\n5 7\n7 9\n3 2\n") == eq
    with pytest.raises(ParseError):
        parse_equivalence("1 2 3\n")


def test_trace_roundtrip():
    moves = [MoveRecord.subdivide((1, 2), 5), MoveRecord.weld((1, 2), 5),
             MoveRecord.relabel({7: 4, 4: 7})]
    text = format_trace(moves)
    assert text.splitlines()[0] == "S 5 ; 1 2"
    assert text.splitlines()[2] == "R 4→7,7→4"
    assert parse_trace(text) == moves
    assert parse_trace("R 4->7, 7->4\n") == [MoveRecord.relabel({4: 7, 7: 4})]
    with pytest.raises(ParseError) as info:
        parse_trace("S 5 ; 1 2\nX 1\n")
    assert info.value.line == 2
