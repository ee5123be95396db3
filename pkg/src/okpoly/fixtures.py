"""Reference models shipped with the repository.

Built programmatically so they can be compared against the JSON files in
models/ and against blowup constructions.
"""

from __future__ import annotations

from fractions import Fraction

from .model import CurveRecord, DivisorClass, IntersectionLattice, SurfaceModel


def _model(gram, curves, ample) -> SurfaceModel:
    lattice = IntersectionLattice.of(gram)
    records = tuple(CurveRecord(n, DivisorClass.of(cls)) for n, cls in curves)
    return SurfaceModel(lattice, records, DivisorClass.of(ample))


def fix_p2() -> SurfaceModel:
    """Rank-1 model of the plane: one declared line."""
    return _model([[1]], [("L", [1])], [1])


def fix_p2_nodal() -> SurfaceModel:
    """The plane with one declared irreducible nodal cubic."""
    return _model([[1]], [("C", [3])], [1])


def fix_dp7() -> SurfaceModel:
    """Blowup of a smooth quadric at one point: three negative curves."""
    gram = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
    curves = [
        ("E_p", [0, 0, 1]),
        ("F1", [1, 0, -1]),
        ("F2", [0, 1, -1]),
    ]
    return _model(gram, curves, [2, 2, -1])


def fix_tower7() -> SurfaceModel:
    """Depth-7 tower over the plane along a nodal cubic."""
    gram = [[0] * 8 for _ in range(8)]
    gram[0][0] = 1
    for i in range(1, 8):
        gram[i][i] = -1
    curves = []
    for i in range(1, 7):
        cls = [0] * 8
        cls[i] = 1
        cls[i + 1] = -1
        curves.append(("E_{%d,7}" % i, cls))
    e7 = [0] * 8
    e7[7] = 1
    curves.append(("E_7", e7))
    curves.append(("C_7", [3, -2, -1, -1, -1, -1, -1, -1]))
    return _model(gram, curves, [15, -8, -7, -6, -5, -4, -3, -2])


def fix_quadric() -> SurfaceModel:
    """Smooth quadric with one declared irreducible nodal curve of type (1,3)."""
    return _model([[0, 1], [1, 0]], [("C", [1, 3])], [1, 1])


FIXTURE_BUILDERS = {
    "fix-p2": fix_p2,
    "fix-p2-nodal": fix_p2_nodal,
    "fix-dp7": fix_dp7,
    "fix-tower7": fix_tower7,
    "fix-quadric": fix_quadric,
}

FIXTURE_ALIASES: dict[str, dict[str, list[int]]] = {
    "fix-p2": {"h": [1]},
    "fix-p2-nodal": {"h": [1]},
    "fix-dp7": {"f1": [1, 0, 0], "f2": [0, 1, 0]},
    "fix-tower7": {"h": [1, 0, 0, 0, 0, 0, 0, 0]},
    "fix-quadric": {"f1": [1, 0], "f2": [0, 1], "H": [1, 1]},
}


def fixture_model(name: str) -> SurfaceModel:
    return FIXTURE_BUILDERS[name]()


def fixture_aliases(name: str) -> dict[str, DivisorClass]:
    return {
        k: DivisorClass.of([Fraction(x) for x in v])
        for k, v in FIXTURE_ALIASES.get(name, {}).items()
    }
