"""Lattice-level blowups and nodal towers.

blow_up extends the lattice by one exceptional direction, replaces listed
curves by their strict transforms and refreshes the ample witness.  Only
transversal (distinct-branch) incidences are supported in general; the one
infinitely-near pattern the tower construction needs (a node, then the
moving intersection point of the strict transform with the last
exceptional) is hardcoded in nodal_tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (
    DegenerateTowerError,
    DomainError,
    UnsupportedFeatureError,
    ValidationError,
)
from .exactnum import QuadNumber
from .model import (
    CurveRecord,
    DivisorClass,
    FlagSpec,
    IntersectionLattice,
    SurfaceModel,
)
from .zariski import positivity


@dataclass(frozen=True)
class PointSpec:
    """A point described by the curves through it and their multiplicities.

    tangential=True marks incidences that are not pairwise transversal;
    the engine refuses those.
    """

    on_curves: tuple[tuple[str, int], ...] = ()
    tangential: bool = False

    @staticmethod
    def generic() -> "PointSpec":
        return PointSpec(())

    @staticmethod
    def make(mults: dict[str, int] | Sequence[tuple[str, int]]) -> "PointSpec":
        items = mults.items() if isinstance(mults, dict) else mults
        return PointSpec(tuple((str(k), int(v)) for k, v in items))


def pullback(cls: DivisorClass, extra: int = 1) -> DivisorClass:
    """Zero-extension of a class to a lattice with extra exceptional directions."""
    return DivisorClass(cls.coords + (Fraction(0),) * extra)


def blow_up(
    m: SurfaceModel, p: PointSpec, exceptional_name: Optional[str] = None
) -> SurfaceModel:
    """Blow up the model at the described point.

    The new lattice gains a basis vector of self-intersection -1 orthogonal
    to all pullbacks; listed curves are replaced by their strict transforms
    (class minus multiplicity times the exceptional) under the same names,
    and the exceptional curve is appended.  The ample witness becomes
    pullback(ample) - eps * e for the first eps in 1/2, 1/4, ... 2^-20 that
    is positive against every curve; failing that the model is rejected.
    """
    if p.tangential:
        raise UnsupportedFeatureError(
            "tangential incidences are not supported by blow_up"
        )
    mults: dict[str, int] = {}
    for name, mult in p.on_curves:
        if not m.has_curve(name):
            raise DomainError("point lies on undeclared curve %r" % name)
        if mult < 1:
            raise DomainError("multiplicity of %r must be positive" % name)
        if name in mults:
            raise DomainError("curve %r listed twice in the point spec" % name)
        mults[name] = mult
    names = list(mults)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            bound = m.pair(m.curve(a).cls, m.curve(b).cls)
            if mults[a] * mults[b] > bound:
                raise DomainError(
                    "incidence %s*%s at one point exceeds %s . %s = %s"
                    % (mults[a], mults[b], a, b, bound)
                )

    rank = m.lattice.rank
    gram = [list(row) + [0] for row in m.lattice.gram]
    gram.append([0] * rank + [-1])
    lattice = IntersectionLattice.of(gram)

    if exceptional_name is None:
        exceptional_name = "E%d" % rank
        suffix = 2
        while m.has_curve(exceptional_name):
            exceptional_name = "E%d_%d" % (rank, suffix)
            suffix += 1
    elif m.has_curve(exceptional_name):
        raise ValidationError("curve name %r already declared" % exceptional_name)

    e_cls = DivisorClass.basis(rank + 1, rank)
    curves = []
    for c in m.curves:
        cls = pullback(c.cls)
        mult = mults.get(c.name, 0)
        if mult:
            cls = cls - e_cls.scale(mult)
        curves.append(CurveRecord(c.name, cls, c.asserted_irreducible))
    curves.append(CurveRecord(exceptional_name, e_cls))

    base_ample = pullback(m.ample_ref)
    ample = None
    for k in range(1, 21):
        candidate = base_ample - e_cls.scale(Fraction(1, 2**k))
        if lattice.pair(candidate, candidate) <= 0:
            continue
        if all(lattice.pair(candidate, c.cls) > 0 for c in curves):
            ample = candidate
            break
    if ample is None:
        raise ValidationError("no valid ample witness found after blowup")
    return SurfaceModel(lattice, tuple(curves), ample)


@dataclass(frozen=True)
class TowerData:
    """The depth-k tower over a nodal curve, with its infinitesimal flag."""

    k: int
    base_model: SurfaceModel
    tower_model: SurfaceModel
    curve: str
    strict_transform: str
    exceptionals: tuple[str, ...]
    e_class: DivisorClass
    flag: FlagSpec
    variant_flag: Optional[FlagSpec]


def nodal_tower(m: SurfaceModel, curve: str, k: int) -> TowerData:
    """Iterated blowup along a node of the given curve.

    First the node (multiplicity 2), then at each stage the intersection
    point of the strict transform with the latest exceptional.  The flag
    lives on the last exceptional at that moving point; the variant flag
    sits at its intersection with the previous exceptional instead.
    """
    if k < 1:
        raise DomainError("tower depth must be >= 1")
    c_rec = m.curve(curve)
    if m.pair(c_rec.cls, c_rec.cls) < 4:
        raise DomainError(
            "curve %r cannot carry a node: self-intersection below 4" % curve
        )

    exc_names = tuple(
        "E_{%d,%d}" % (i, k) if i < k else "E_%d" % k for i in range(1, k + 1)
    )
    for n in exc_names:
        if m.has_curve(n):
            raise ValidationError("tower name %r clashes with a declared curve" % n)

    cur = blow_up(m, PointSpec.make({curve: 2}), exc_names[0])
    for i in range(1, k):
        cur = blow_up(
            cur, PointSpec.make({curve: 1, exc_names[i - 1]: 1}), exc_names[i]
        )

    new_c_name = "C_%d" % k
    if cur.has_curve(new_c_name):
        raise ValidationError("tower name %r clashes with a declared curve" % new_c_name)
    renamed = []
    others = []
    for rec in cur.curves:
        if rec.name == curve:
            renamed.append(CurveRecord(new_c_name, rec.cls, rec.asserted_irreducible))
        elif rec.name in exc_names:
            continue
        else:
            others.append(rec)
    exceptional_records = [cur.curve(n) for n in exc_names]
    ordered = tuple(others + exceptional_records + renamed)
    tower_model = SurfaceModel(cur.lattice, ordered, cur.ample_ref)

    rank = tower_model.lattice.rank
    e_class = DivisorClass.zero(rank)
    for i, name in enumerate(exc_names, start=1):
        e_class = e_class + tower_model.curve(name).cls.scale(i)

    flag = FlagSpec.make(exc_names[-1], {new_c_name: 1})
    variant = (
        FlagSpec.make(exc_names[-1], {exc_names[-2]: 1}) if k >= 2 else None
    )
    return TowerData(
        k,
        m,
        tower_model,
        curve,
        new_c_name,
        exc_names,
        e_class,
        flag,
        variant,
    )


def tower_min_k(D: DivisorClass, curve: str, m: SurfaceModel) -> int:
    """Smallest tower depth on which the strict transform can enter the
    negative part while the path is still big.

    Exact integer feasibility condition: k * (D.C)^2 < (k+1)^2 * D^2, i.e.
    there is a t beyond k(D.C)/(k+1) with D^2 - t^2/k still positive.
    """
    st = positivity(D, m)
    if not (st.big and st.nef_in_model):
        raise DomainError("divisor must be big and nef in the model")
    dc = m.pair(D, m.curve(curve).cls)
    if dc <= 0:
        raise DomainError("divisor must pair positively with the curve")
    d2 = m.pair(D, D)
    k = 1
    while k * dc * dc >= (k + 1) * (k + 1) * d2:
        k += 1
    return k


@dataclass(frozen=True)
class TowerReferenceValues:
    """Closed forms for the tower path D - t*E_k.

    t_entry_bound is where the strict transform must join the negative
    part; rel_negative_law gives the relative negative part coefficients
    i*t/k on the exceptional chain; pmu is the residual on the final
    chamber as a function of t (or mu); mu_if_orthogonal solves the
    orthogonality of the residual with the flag curve; pmu_sq_det is the
    residual's self-intersection there, a pure 2x2 determinant.

    The final-chamber residual is D - a(mu)*C - w(mu)*E; coef_curve and
    coef_chain evaluate a and w, and the *_num/_den fields expose their
    symbolic linear coefficients in mu for serialization.
    """

    k: int
    t_entry_bound: Fraction
    rel_negative_law: tuple[tuple[str, Fraction], ...]
    mu_if_orthogonal: Fraction
    pmu_sq_det: Fraction
    curve_num_mu: Fraction
    curve_num_const: Fraction
    chain_num_mu: Fraction
    chain_num_const: Fraction
    den: Fraction
    coef_curve: Callable[[object], object]
    coef_chain: Callable[[object], object]
    pmu: Callable[[object], tuple]


def tower_reference_values(
    D: DivisorClass,
    curve: str,
    k: int,
    m: SurfaceModel,
    tower: Optional[TowerData] = None,
) -> TowerReferenceValues:
    """Reference values for the tower path, from the orthogonality system.

    On the final chamber the residual is D - a*C - w*E with
        a(mu) = ((k+1)*mu - k*(D.C)) / ((k+1)^2 - k*C^2)
        w(mu) = ((k+1)*(D.C) - C^2*mu) / ((k+1)^2 - k*C^2),
    solved from orthogonality to the strict transform and the exceptional
    chain.  A vanishing denominator means the tower is degenerate for
    these invariants.
    """
    if tower is None:
        tower = nodal_tower(m, curve, k)
    if tower.k != k or tower.curve != curve:
        raise DomainError("tower data does not match the requested curve and depth")
    c_cls = m.curve(curve).cls
    dc = m.pair(D, c_cls)
    c2 = m.pair(c_cls, c_cls)
    d2 = m.pair(D, D)
    den = Fraction((k + 1) * (k + 1)) - k * c2
    if den == 0:
        raise DegenerateTowerError(
            "vanishing denominator (k+1)^2 - k*C^2 at k = %d, C^2 = %s" % (k, c2)
        )
    if c2 == 0:
        raise DegenerateTowerError("curve has self-intersection zero")

    t_entry = Fraction(k) * dc / (k + 1)
    law = tuple(
        (tower.exceptionals[i - 1], Fraction(i, k)) for i in range(1, k)
    )
    mu_orth = Fraction(k + 1) * dc / c2
    det = (d2 * c2 - dc * dc) / c2

    extra = tower.tower_model.lattice.rank - m.lattice.rank
    d_pull = pullback(D, extra)
    c_pull = pullback(c_cls, extra)
    e_cls = tower.e_class

    def coef_curve(mu):
        return ((k + 1) * QuadNumber.of(mu) - k * dc) / den

    def coef_chain(mu):
        return ((k + 1) * dc - c2 * QuadNumber.of(mu)) / den

    def pmu(mu):
        a = coef_curve(mu)
        w = coef_chain(mu)
        return tuple(
            QuadNumber.of(dv) - a * QuadNumber.of(cv) - w * QuadNumber.of(ev)
            for dv, cv, ev in zip(d_pull.coords, c_pull.coords, e_cls.coords)
        )

    return TowerReferenceValues(
        k,
        t_entry,
        law,
        mu_orth,
        det,
        Fraction(k + 1),
        Fraction(-k) * dc,
        -c2,
        Fraction(k + 1) * dc,
        den,
        coef_curve,
        coef_chain,
        pmu,
    )
