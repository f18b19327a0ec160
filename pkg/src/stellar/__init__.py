"""Stellar moves, vertex-equivalence quotients, and sphere checks for small
simplicial complexes over Z2."""

from .collapse import CollapseResult, barycentric, collapse
from .complex import (
    Complex,
    FaceLattice,
    boundary,
    euler_characteristic,
    face_lattice,
    full_simplex,
    is_closed,
    is_uniform,
    join,
    link,
    max_label,
    residual,
    simplex,
    simplex_boundary,
    star,
    vertices,
)
from .errors import StellarError
from .homology import homology_z2, identification_complex
from .moves import (
    MoveRecord,
    MoveTrace,
    enumerate_moves,
    factor_link,
    relabel,
    replay,
    subdivide,
    weld,
)
from .normalize import ConeTriangulation, normalize, verify_cone
from .pipeline import PipelineReport, poincare_pipeline
from .quotient import (
    RegularityReport,
    VertexEquivalence,
    check_regular,
    cone_boundary_check,
    quotient,
)
from .recognize import (
    BALL,
    SPHERE,
    Verdict,
    is_stellar_manifold,
    recognize,
    residual_manifold_check,
)

__version__ = "0.1.0"
