"""Surface data model: intersection lattice, declared curves, flags.

A SurfaceModel is the whole computational universe.  Its answers are
correct for the intended geometry exactly when the declared curve list
contains every irreducible curve that can appear in a negative part along
the studied paths; this completeness is an axiom of the model, not a
checkable property (see README).

Models are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class DivisorClass:
    """Exact rational vector in the lattice basis."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable[Fraction | int]) -> "DivisorClass":
        return DivisorClass(tuple(Fraction(v) for v in values))

    @staticmethod
    def zero(rank: int) -> "DivisorClass":
        return DivisorClass((Fraction(0),) * rank)

    @staticmethod
    def basis(rank: int, index: int) -> "DivisorClass":
        return DivisorClass.of(tuple(1 if i == index else 0 for i in range(rank)))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def scale(self, c: Fraction | int) -> "DivisorClass":
        c = Fraction(c)
        return DivisorClass(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class IntersectionLattice:
    """Free lattice of rank rho with an integer symmetric pairing.

    Valid lattices have signature (1, rho-1): exactly one positive
    eigenvalue, none zero.
    """

    rank: int
    gram: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(gram: Sequence[Sequence[int]]) -> "IntersectionLattice":
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        return IntersectionLattice(len(rows), rows)

    def pair(self, x: DivisorClass, y: DivisorClass) -> Fraction:
        if len(x) != self.rank or len(y) != self.rank:
            raise DomainError(
                "dimension mismatch: rank %d vs vectors of length %d, %d"
                % (self.rank, len(x), len(y))
            )
        total = Fraction(0)
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            row = self.gram[i]
            total += xi * sum(
                (row[j] * yj for j, yj in enumerate(y.coords) if yj != 0), Fraction(0)
            )
        return total


@dataclass(frozen=True)
class CurveRecord:
    """A declared irreducible curve: a name plus its class."""

    name: str
    cls: DivisorClass
    asserted_irreducible: bool = True


@dataclass(frozen=True)
class SurfaceModel:
    lattice: IntersectionLattice
    curves: tuple[CurveRecord, ...]
    ample_ref: DivisorClass

    def curve(self, name: str) -> CurveRecord:
        for c in self.curves:
            if c.name == name:
                return c
        raise DomainError("unknown curve %r" % name)

    def has_curve(self, name: str) -> bool:
        return any(c.name == name for c in self.curves)

    def curve_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.curves)

    def pair(self, x: DivisorClass, y: DivisorClass) -> Fraction:
        return self.lattice.pair(x, y)

    def self_int(self, x: DivisorClass) -> Fraction:
        return self.lattice.pair(x, x)

    def negative_candidates(self) -> tuple[CurveRecord, ...]:
        """Declared curves with negative self-intersection."""
        return tuple(c for c in self.curves if self.self_int(c.cls) < 0)

    def curve_gram(self, names: Sequence[str]) -> list[list[Fraction]]:
        classes = [self.curve(n).cls for n in names]
        return [[self.pair(a, b) for b in classes] for a in classes]


def intersect(
    x: DivisorClass, y: DivisorClass, lattice: IntersectionLattice | SurfaceModel
) -> Fraction:
    """Exact intersection product x . y."""
    if isinstance(lattice, SurfaceModel):
        lattice = lattice.lattice
    return lattice.pair(x, y)


def is_negative_definite(
    curves: Sequence[CurveRecord | str],
    lattice_or_model: IntersectionLattice | SurfaceModel,
) -> bool:
    """Whether the Gram matrix of the given curves is negative definite.

    The empty set counts as negative definite.  Accepts records, or names
    when a model is given.
    """
    if isinstance(lattice_or_model, SurfaceModel):
        model = lattice_or_model
        records = [c if isinstance(c, CurveRecord) else model.curve(c) for c in curves]
        lattice = model.lattice
    else:
        if any(isinstance(c, str) for c in curves):
            raise DomainError("curve names need a SurfaceModel to resolve against")
        records = list(curves)  # type: ignore[arg-type]
        lattice = lattice_or_model
    names = [r.name for r in records]
    if len(set(names)) != len(names):
        raise DomainError("curves must be distinct")
    classes = [r.cls for r in records]
    gram = [[lattice.pair(a, b) for b in classes] for a in classes]
    return linalg.is_negative_definite_matrix(gram)


@dataclass(frozen=True)
class FlagSpec:
    """Flag curve plus a symbolic point on it.

    The point is described by its local intersection multiplicities with
    the other declared curves; names absent from local_mults meet the flag
    curve away from the point (or not at all).
    """

    curve: str
    local_mults: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def make(curve: str, mults: Mapping[str, int] | None = None) -> "FlagSpec":
        items = tuple(sorted((str(k), int(v)) for k, v in (mults or {}).items()))
        return FlagSpec(curve, items)

    def mult(self, name: str) -> int:
        for k, v in self.local_mults:
            if k == name:
                return v
        return 0

    def is_generic(self) -> bool:
        return all(v == 0 for _, v in self.local_mults)

    def label(self) -> str:
        if self.is_generic():
            return "%s@generic" % self.curve
        inner = ",".join("%s:%d" % (k, v) for k, v in self.local_mults if v)
        return "%s@{%s}" % (self.curve, inner)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_model(m: SurfaceModel) -> ValidationReport:
    """Check the model invariants; returns a report, never raises.

    Checks: symmetric nonsingular gram of signature (1, rho-1) by exact
    characteristic-polynomial sign analysis, positivity of the ample
    witness against every declared curve, name uniqueness, and integer
    self-intersections.
    """
    v: list[str] = []
    L = m.lattice
    if L.rank < 1:
        v.append("lattice rank must be >= 1")
        return ValidationReport(tuple(v))
    if len(L.gram) != L.rank or any(len(row) != L.rank for row in L.gram):
        v.append("gram matrix is not %d x %d" % (L.rank, L.rank))
        return ValidationReport(tuple(v))
    if any(L.gram[i][j] != L.gram[j][i] for i in range(L.rank) for j in range(L.rank)):
        v.append("gram matrix is not symmetric")
        return ValidationReport(tuple(v))
    pos, neg, zero = linalg.signature(L.gram)
    if zero:
        v.append("gram matrix is singular (%d zero eigenvalues)" % zero)
    if pos != 1 or neg != L.rank - zero - 1:
        v.append(
            "gram signature is (%d, %d), expected (1, %d)" % (pos, neg, L.rank - 1)
        )

    names = [c.name for c in m.curves]
    seen = set()
    for n in names:
        if n in seen:
            v.append("duplicate curve name %r" % n)
        seen.add(n)

    for c in m.curves:
        if len(c.cls) != L.rank:
            v.append("curve %r class has wrong length" % c.name)
            continue
        s = L.pair(c.cls, c.cls)
        if s.denominator != 1:
            v.append("curve %r has non-integer self-intersection %s" % (c.name, s))
        if not c.asserted_irreducible:
            v.append("curve %r is not asserted irreducible" % c.name)

    if len(m.ample_ref) != L.rank:
        v.append("ample_ref has wrong length")
    else:
        if L.pair(m.ample_ref, m.ample_ref) <= 0:
            v.append("ample_ref^2 = %s is not positive" % L.pair(m.ample_ref, m.ample_ref))
        for c in m.curves:
            if len(c.cls) == L.rank and L.pair(m.ample_ref, c.cls) <= 0:
                v.append(
                    "ample_ref . %s = %s is not positive"
                    % (c.name, L.pair(m.ample_ref, c.cls))
                )
    return ValidationReport(tuple(v))


def validate_flag(flag: FlagSpec, m: SurfaceModel) -> None:
    """Raise ValidationError unless the flag is admissible for the model."""
    if not m.has_curve(flag.curve):
        raise ValidationError("flag curve %r is not declared" % flag.curve)
    c = m.curve(flag.curve)
    for name, mult in flag.local_mults:
        if name == flag.curve:
            raise ValidationError("flag curve cannot appear in its own local_mults")
        if not m.has_curve(name):
            raise ValidationError("local_mults references unknown curve %r" % name)
        if mult < 0:
            raise ValidationError("negative local multiplicity for %r" % name)
        total = m.pair(m.curve(name).cls, c.cls)
        if mult > total:
            raise ValidationError(
                "local multiplicity %d of %r exceeds global intersection %s"
                % (mult, name, total)
            )
