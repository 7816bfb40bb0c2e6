"""Exact homotopy invariants of circle loops on symplectic toric manifolds."""
from .polytope import (
    HalfSpace,
    Polytope,
    VertexFrame,
    build_polytope,
    centroid,
    is_delzant,
    is_quantizable,
    minimal_rescale,
    transform,
    triangulate,
    vertex_frames,
    volume,
)
from .invariants import (
    CircleClass,
    distinguishable,
    enumerate_distinct_classes,
    lambda_invariant,
    lambda_rescaled,
    localization_check,
    normalized_hamiltonian,
)
from .families import BlowupParams, HirzebruchParams, blowup_cpn, hirzebruch, simplex

__version__ = "0.1.0"
