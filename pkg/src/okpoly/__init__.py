"""Exact Newton-Okounkov polygons of big divisors on surface lattice models."""

from .exactnum import QuadNumber, quad_compare, quad_normalize, quad_solve
from .model import (
    CurveRecord,
    DivisorClass,
    FlagSpec,
    IntersectionLattice,
    SurfaceModel,
    intersect,
    is_negative_definite,
    validate_flag,
    validate_model,
)
from .zariski import (
    PositivityStatus,
    ZariskiDecomposition,
    positivity,
    relative_zariski,
    support_sets,
    zariski_decompose,
)
from .okounkov import (
    OkounkovPolygon,
    TracedPath,
    boundary_functions,
    polygon,
    trace_path,
    vertex_census,
)
from .invariants import (
    BoundReport,
    NegativeConfiguration,
    bound_report,
    config_stats,
    mv,
    mv_null,
    negative_configuration,
    rho_D,
)
from .birational import (
    PointSpec,
    TowerData,
    blow_up,
    nodal_tower,
    tower_min_k,
    tower_reference_values,
)

__all__ = [
    "QuadNumber",
    "quad_compare",
    "quad_normalize",
    "quad_solve",
    "CurveRecord",
    "DivisorClass",
    "FlagSpec",
    "IntersectionLattice",
    "SurfaceModel",
    "intersect",
    "is_negative_definite",
    "validate_flag",
    "validate_model",
    "PositivityStatus",
    "ZariskiDecomposition",
    "positivity",
    "relative_zariski",
    "support_sets",
    "zariski_decompose",
    "OkounkovPolygon",
    "TracedPath",
    "boundary_functions",
    "polygon",
    "trace_path",
    "vertex_census",
    "BoundReport",
    "NegativeConfiguration",
    "bound_report",
    "config_stats",
    "mv",
    "mv_null",
    "negative_configuration",
    "rho_D",
    "PointSpec",
    "TowerData",
    "blow_up",
    "nodal_tower",
    "tower_min_k",
    "tower_reference_values",
]

__version__ = "0.1.0"
