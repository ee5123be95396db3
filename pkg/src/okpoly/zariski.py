"""Zariski decomposition and positivity over a SurfaceModel.

The solver grows the support of the negative part iteratively: start with
the declared curves pairing negatively with the class, solve the Gram
system so the residual is orthogonal to the support, then add any declared
curve the residual still pairs negatively with, until a fixpoint.  Supports
are never shrunk; a negative solved coefficient, a non-negative-definite
support or a residual failing the positivity probes all mean the class is
not pseudoeffective in the model.

Nefness here always means nefness against the declared curves only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DomainError, NotPseudoeffectiveError
from .model import CurveRecord, DivisorClass, SurfaceModel, is_negative_definite


@dataclass(frozen=True)
class ZariskiDecomposition:
    """D = positive + sum of coeff * curve, with the usual orthogonality.

    negative_support lists only strictly positive coefficients, in curve
    declaration order.
    """

    positive: DivisorClass
    negative_support: tuple[tuple[str, Fraction], ...]

    def coeff(self, name: str) -> Fraction:
        for n, a in self.negative_support:
            if n == name:
                return a
        return Fraction(0)

    def support_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.negative_support)

    def negative_class(self, m: SurfaceModel) -> DivisorClass:
        total = DivisorClass.zero(m.lattice.rank)
        for n, a in self.negative_support:
            total = total + m.curve(n).cls.scale(a)
        return total

    def is_trivial(self) -> bool:
        return not self.negative_support


@dataclass(frozen=True)
class PositivityStatus:
    pseudoeffective: bool
    big: bool
    nef_in_model: bool


def _solve_on_support(
    m: SurfaceModel, support: Sequence[CurveRecord], d: DivisorClass
) -> list[Fraction]:
    """Coefficients a with (d - sum a_i C_i) . C_j = 0 on the support."""
    gram = [[m.pair(a.cls, b.cls) for b in support] for a in support]
    rhs = [m.pair(d, c.cls) for c in support]
    sol = linalg.solve_linear(gram, rhs)
    if sol is None:
        raise NotPseudoeffectiveError("singular support Gram matrix")
    return sol


def _grow_support(
    m: SurfaceModel,
    d: DivisorClass,
    universe: Sequence[CurveRecord],
    not_negative_definite_error: type[Exception],
) -> tuple[list[CurveRecord], list[Fraction], DivisorClass]:
    support = [c for c in universe if m.pair(d, c.cls) < 0]
    in_support = {c.name for c in support}
    while True:
        if support and not is_negative_definite(support, m):
            raise not_negative_definite_error(
                "support {%s} is not negative definite"
                % ", ".join(c.name for c in support)
            )
        coeffs = _solve_on_support(m, support, d)
        if any(a < 0 for a in coeffs):
            raise not_negative_definite_error(
                "negative solved coefficient on {%s}"
                % ", ".join(c.name for c in support)
            )
        p = d
        for c, a in zip(support, coeffs):
            p = p - c.cls.scale(a)
        newly = [
            c
            for c in universe
            if c.name not in in_support and m.pair(p, c.cls) < 0
        ]
        if not newly:
            return support, coeffs, p
        support.extend(newly)
        in_support.update(c.name for c in newly)


def zariski_decompose(D: DivisorClass, m: SurfaceModel) -> ZariskiDecomposition:
    """Zariski decomposition of D, or NotPseudoeffectiveError.

    On success all invariants hold: D = P + N exactly, P orthogonal to
    every support curve, P nef against the declared curves, support Gram
    negative definite, coefficients positive.
    """
    support, coeffs, p = _grow_support(m, D, m.curves, NotPseudoeffectiveError)
    if m.pair(p, p) < 0:
        raise NotPseudoeffectiveError("residual has negative self-intersection")
    if m.pair(p, m.ample_ref) < 0:
        raise NotPseudoeffectiveError("residual pairs negatively with the ample witness")
    order = {c.name: i for i, c in enumerate(m.curves)}
    entries = sorted(
        ((c.name, a) for c, a in zip(support, coeffs) if a > 0),
        key=lambda kv: order[kv[0]],
    )
    return ZariskiDecomposition(p, tuple(entries))


def positivity(D: DivisorClass, m: SurfaceModel) -> PositivityStatus:
    """Pseudoeffectivity / bigness / nefness flags of D in the model.

    Bigness is probed against the ample witness: P is big iff P^2 > 0 and
    P . ample_ref > 0, which picks the correct component of the positive
    cone.
    """
    try:
        dec = zariski_decompose(D, m)
    except NotPseudoeffectiveError:
        return PositivityStatus(False, False, False)
    p = dec.positive
    big = m.pair(p, p) > 0 and m.pair(p, m.ample_ref) > 0
    return PositivityStatus(True, big, dec.is_trivial())


def support_sets(
    D: DivisorClass, m: SurfaceModel
) -> tuple[frozenset[str], frozenset[str]]:
    """(Null(P_D), Neg(D)): curves orthogonal to the positive part, and the
    support of the negative part."""
    dec = zariski_decompose(D, m)
    null = frozenset(
        c.name for c in m.curves if m.pair(dec.positive, c.cls) == 0
    )
    neg = frozenset(dec.support_names())
    return null, neg


def relative_zariski(
    D: DivisorClass, config: Sequence[str], m: SurfaceModel
) -> ZariskiDecomposition:
    """Zariski decomposition of D relative to a prescribed configuration.

    The negative part is the unique effective class supported on the
    configuration with (D - N) . E >= 0 for every configuration curve and
    equality whenever the coefficient is positive.  Exists for arbitrary D;
    the configuration must be negative definite.
    """
    records = [m.curve(n) for n in config]
    if len({r.name for r in records}) != len(records):
        raise DomainError("configuration curves must be distinct")
    if not is_negative_definite(records, m):
        raise DomainError(
            "configuration {%s} is not negative definite" % ", ".join(config)
        )
    support, coeffs, p = _grow_support(m, D, records, DomainError)
    order = {c.name: i for i, c in enumerate(m.curves)}
    entries = sorted(
        ((c.name, a) for c, a in zip(support, coeffs) if a > 0),
        key=lambda kv: order[kv[0]],
    )
    return ZariskiDecomposition(p, tuple(entries))
