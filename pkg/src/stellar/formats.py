"""Text formats: ``.cplx`` complexes, ``.equiv`` equivalences, ``.trace`` move traces."""

from __future__ import annotations

import re
import warnings
from pathlib import Path

from .complex import Complex, simplex
from .errors import ParseError
from .moves import SUBDIVIDE, WELD, MoveRecord
from .quotient import VertexEquivalence


class DuplicateGeneratorWarning(UserWarning):
    """A generator occurred an even number of times and cancelled mod 2."""


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _labels(tokens, no: int) -> list[int]:
    out = []
    for tok in tokens:
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"expected a positive integer label, got {tok!r}", no)
        out.append(int(tok))
    return out


def parse_complex(text: str) -> Complex:
    gens: set = set()
    cancelled = []
    for no, line in _content_lines(text):
        labels = _labels(line.split(), no)
        try:
            s = simplex(*labels)
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
        if s in gens:
            gens.remove(s)
            cancelled.append(no)
        else:
            gens.add(s)
    if cancelled:
        warnings.warn(f"duplicate generators cancelled mod 2 (lines {cancelled})",
                      DuplicateGeneratorWarning, stacklevel=2)
    return Complex._of(frozenset(gens))


def format_complex(K: Complex) -> str:
    return "".join(" ".join(map(str, g)) + "\n" for g in sorted(K.generators))


def read_complex(path) -> Complex:
    return parse_complex(Path(path).read_text(encoding="utf-8"))


def write_complex(path, K: Complex) -> None:
    Path(path).write_text(format_complex(K), encoding="utf-8")


def parse_equivalence(text: str) -> VertexEquivalence:
    eq = VertexEquivalence()
    for no, line in _content_lines(text):
        labels = _labels(line.split(), no)
        if len(labels) != 2:
            raise ParseError("expected two labels per line", no)
        eq.merge(*labels)
    return eq


def format_equivalence(eq: VertexEquivalence) -> str:
    return "".join(f"{i} {j}\n" for i, j in eq.pairs())


def read_equivalence(path) -> VertexEquivalence:
    return parse_equivalence(Path(path).read_text(encoding="utf-8"))


def write_equivalence(path, eq: VertexEquivalence) -> None:
    Path(path).write_text(format_equivalence(eq), encoding="utf-8")


_MOVE = re.compile(r"^([SW])\s+(\S+)\s*;\s*(.*)$")
_PAIR = re.compile(r"^\s*(\S+)\s*(?:→|->)\s*(\S+)\s*$")


def parse_trace(text: str) -> list[MoveRecord]:
    moves = []
    for no, line in _content_lines(text):
        m = _MOVE.match(line)
        if m:
            kind, a, rest = m.groups()
            (a,) = _labels([a], no)
            labels = _labels(rest.split(), no)
            if not labels:
                raise ParseError("move needs a simplex", no)
            try:
                moves.append(MoveRecord(SUBDIVIDE if kind == "S" else WELD, simplex(*labels), a))
            except ValueError as exc:
                raise ParseError(str(exc), no) from None
            continue
        if line.startswith("R"):
            mapping = {}
            body = line[1:].strip()
            for part in filter(None, (p.strip() for p in body.split(","))):
                pm = _PAIR.match(part)
                if not pm:
                    raise ParseError(f"bad relabel entry {part!r}", no)
                i, j = _labels(pm.groups(), no)
                mapping[i] = j
            moves.append(MoveRecord.relabel(mapping))
            continue
        raise ParseError(f"unrecognized trace line {line!r}", no)
    return moves


def format_trace(moves) -> str:
    return "".join(str(m) + "\n" for m in moves)


def read_trace(path) -> list[MoveRecord]:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def write_trace(path, moves) -> None:
    Path(path).write_text(format_trace(moves), encoding="utf-8")

