"""Small named triangulations used by tests, examples, and the CLI."""

from __future__ import annotations

from importlib import resources
from itertools import product

from .complex import Complex, full_simplex, simplex_boundary
from .formats import parse_complex


def icosahedron() -> Complex:
    """Boundary of the icosahedron: 12 vertices, 20 triangles."""
    upper = [(1, 2 + k, 2 + (k + 1) % 5) for k in range(5)]
    lower = [(12, 7 + k, 7 + (k + 1) % 5) for k in range(5)]
    band = []
    for k in range(5):
        u, u2 = 2 + k, 2 + (k + 1) % 5
        w, w2 = 7 + k, 7 + (k + 1) % 5
        band += [(u, u2, w), (u2, w, w2)]
    return Complex(upper + lower + band)


def torus7() -> Complex:
    """The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    gens = []
    for i in range(7):
        gens.append((i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))
        gens.append((i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))
    return Complex(gens)


def mobius7() -> Complex:
    """A 7-vertex Möbius band: triangles {i, i+1, i+2} mod 7."""
    return Complex((i + 1, (i + 1) % 7 + 1, (i + 2) % 7 + 1) for i in range(7))


def sixteen_cell() -> Complex:
    """Boundary of the 4-dimensional cross-polytope; antipodal pairs (1 2), (3 4), (5 6), (7 8)."""
    return Complex(tuple(2 * i + 1 + b for i, b in enumerate(bits)) for bits in product((0, 1), repeat=4))


def cone_over(K: Complex, apex: int | None = None) -> Complex:
    if apex is None:
        apex = K.max_label() + 1
    return Complex(g + (apex,) for g in K.generators)


BUILDERS = {
    "boundary_simplex_2": lambda: simplex_boundary(1),
    "boundary_simplex_3": lambda: simplex_boundary(2),
    "boundary_simplex_4": lambda: simplex_boundary(3),
    "simplex_3": lambda: full_simplex(3),
    "icosahedron": icosahedron,
    "torus7": torus7,
    "sixteen_cell": sixteen_cell,
    "mobius7": mobius7,
}


def names() -> list[str]:
    return sorted(BUILDERS)


def path(name: str):
    return resources.files(__package__).joinpath("corpus", f"{name}.cplx")


def load(name: str) -> Complex:
    """Load a bundled ``.cplx`` file by name (see :func:`names`)."""
    if name not in BUILDERS:
        raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(names())}")
    return parse_complex(path(name).read_text(encoding="utf-8"))
