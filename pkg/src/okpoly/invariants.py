"""Numerical invariants and vertex-count bound checkers.

rho_d is the lattice rank minus the number of declared curves orthogonal
to the positive part; mv and mv_null maximise per-configuration counts
over negative definite configurations of declared negative curves, by
exhaustive enumeration pruned by the rank cap and definiteness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DomainError, ModelInconsistencyError
from .model import DivisorClass, FlagSpec, SurfaceModel, is_negative_definite
from .okounkov import OkounkovPolygon
from .zariski import positivity, zariski_decompose


@dataclass(frozen=True)
class NegativeConfiguration:
    """A negative definite set of declared curves, with its dual graph."""

    curves: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    null_members: tuple[str, ...]

    def components(self) -> list[set[str]]:
        adj = {n: set() for n in self.curves}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[str] = set()
        out = []
        for n in self.curves:
            if n in seen:
                continue
            comp, stack = set(), [n]
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            out.append(comp)
        return out


def negative_configuration(
    names: Iterable[str], null_set: Iterable[str], m: SurfaceModel
) -> NegativeConfiguration:
    names = tuple(sorted(set(names)))
    if not is_negative_definite(names, m):
        raise DomainError(
            "configuration {%s} is not negative definite" % ", ".join(names)
        )
    edges = []
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if m.pair(m.curve(a).cls, m.curve(b).cls) > 0:
                edges.append((a, b))
    null = tuple(sorted(set(null_set) & set(names)))
    return NegativeConfiguration(names, tuple(edges), null)


@dataclass(frozen=True)
class ConfigStats:
    k: int
    mc: int
    mv: int


def _null_of_positive_part(D: DivisorClass, m: SurfaceModel) -> frozenset[str]:
    dec = zariski_decompose(D, m)
    return frozenset(c.name for c in m.curves if m.pair(dec.positive, c.cls) == 0)


def rho_D(D: DivisorClass, m: SurfaceModel) -> int:
    """Lattice rank minus the number of curves orthogonal to the positive part."""
    if not positivity(D, m).big:
        raise DomainError("divisor is not big in the model")
    value = m.lattice.rank - len(_null_of_positive_part(D, m))
    if not 1 <= value <= m.lattice.rank:
        raise ModelInconsistencyError("relative Picard number %d out of range" % value)
    return value


def config_stats(
    cfg: NegativeConfiguration,
    D: DivisorClass,
    m: SurfaceModel,
    mode: str = "full",
) -> ConfigStats:
    """(k, mc, mv) for a configuration, in mode "full" or "all-but-one".

    k counts configuration members outside the null set of D's positive
    part, mc the largest number of such members inside a single connected
    component.  The mv offsets are +4/+3 in full mode (k below / at
    rho_D - 1) and +3/+2 in all-but-one mode (k below / at rho_D).
    """
    if mode not in ("full", "all-but-one"):
        raise DomainError("unknown mode %r" % mode)
    null = _null_of_positive_part(D, m)
    members = set(cfg.curves)
    missing = null - members
    if mode == "full":
        if missing:
            raise DomainError(
                "configuration must contain the null set; missing {%s}"
                % ", ".join(sorted(missing))
            )
    else:
        if len(missing) != 1:
            raise DomainError(
                "all-but-one configuration must omit exactly one null curve"
            )
    rho_d = m.lattice.rank - len(null)
    k = len([n for n in cfg.curves if n not in null])
    mc = 0
    for comp in cfg.components():
        mc = max(mc, len([n for n in comp if n not in null]))
    if mode == "full":
        if k > rho_d - 1:
            raise ModelInconsistencyError("k = %d exceeds rho_D - 1 = %d" % (k, rho_d - 1))
        mv_value = k + mc + (4 if k < rho_d - 1 else 3)
    else:
        if k > rho_d:
            raise ModelInconsistencyError("k = %d exceeds rho_D = %d" % (k, rho_d))
        mv_value = k + mc + (3 if k < rho_d else 2)
    return ConfigStats(k, mc, mv_value)


def _iter_negative_definite_supersets(
    m: SurfaceModel, required: Sequence[str], optional: Sequence[str], size_cap: int
) -> Iterator[tuple[str, ...]]:
    """All negative definite sets required + subset(optional), sizes <= cap.

    Prunes on the rank cap and on definiteness (supersets of indefinite
    sets are never definite).
    """
    base = tuple(sorted(required))
    if len(base) > size_cap or not is_negative_definite(base, m):
        return
    pool = tuple(n for n in sorted(optional) if n not in set(base))

    def rec(current: tuple[str, ...], rest: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
        yield current
        if len(current) >= size_cap:
            return
        for i, name in enumerate(rest):
            cand = current + (name,)
            if is_negative_definite(cand, m):
                yield from rec(cand, rest[i + 1 :])

    yield from rec(base, pool)


def _positive_part_for_counts(D: DivisorClass, m: SurfaceModel) -> DivisorClass:
    """Big inputs only; big-not-nef inputs delegate to their positive part."""
    if not positivity(D, m).big:
        raise DomainError("divisor is not big in the model")
    dec = zariski_decompose(D, m)
    return dec.positive


def mv(D: DivisorClass, m: SurfaceModel) -> int:
    """Maximum mv over negative definite configurations containing the null set."""
    p = _positive_part_for_counts(D, m)
    null = sorted(_null_of_positive_part(p, m))
    negcands = [c.name for c in m.negative_candidates()]
    if set(null) - set(negcands):
        raise ModelInconsistencyError(
            "null set contains a curve of nonnegative self-intersection"
        )
    best: Optional[int] = None
    cap = m.lattice.rank - 1
    for names in _iter_negative_definite_supersets(m, null, negcands, cap):
        cfg = negative_configuration(names, null, m)
        stats = config_stats(cfg, p, m, "full")
        if best is None or stats.mv > best:
            best = stats.mv
    if best is None:
        raise ModelInconsistencyError("null set is not negative definite")
    return best


def mv_null(D: DivisorClass, m: SurfaceModel) -> Optional[int]:
    """Maximum all-but-one mv, or None when the null set is empty."""
    p = _positive_part_for_counts(D, m)
    null = sorted(_null_of_positive_part(p, m))
    if not null:
        return None
    negcands = [c.name for c in m.negative_candidates()]
    best: Optional[int] = None
    cap = m.lattice.rank - 1
    for omitted in null:
        required = [n for n in null if n != omitted]
        optional = [n for n in negcands if n != omitted]
        for names in _iter_negative_definite_supersets(m, required, optional, cap):
            cfg = negative_configuration(names, null, m)
            stats = config_stats(cfg, p, m, "all-but-one")
            if best is None or stats.mv > best:
                best = stats.mv
    return best


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class BoundReport:
    rho: int
    rho_d: int
    vertex_total: int
    bound_a: int
    mv_value: Optional[int]
    mv_null_value: Optional[int]
    verdicts: tuple[Verdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)


def bound_report(
    D: DivisorClass, flag: FlagSpec, poly: OkounkovPolygon, m: SurfaceModel
) -> BoundReport:
    """Per-run verdicts for the vertex-count bounds and shape invariants.

    (i) total <= 2*rho_D + 2 always; (ii) total <= mv when the positive
    part pairs positively with the flag curve; (iii) total <= mv_null when
    the flag curve is orthogonal to it; (iv) area equals half the square
    of the positive part; (v) the lower boundary is nondecreasing.
    """
    dec = zariski_decompose(D, m)
    null = _null_of_positive_part(D, m)
    rho = m.lattice.rank
    rho_d = rho - len(null)
    total = len(poly.vertices)
    bound_a = 2 * rho_d + 2
    p_dot_c = m.pair(dec.positive, m.curve(flag.curve).cls)

    verdicts = [
        Verdict(
            "vertex_bound_rho",
            total <= bound_a,
            "%d <= %d" % (total, bound_a),
        )
    ]
    mv_value = mv(D, m)
    mv_null_value = mv_null(D, m)
    if p_dot_c > 0:
        verdicts.append(
            Verdict("vertex_bound_mv", total <= mv_value, "%d <= %d" % (total, mv_value))
        )
    if flag.curve in null:
        if mv_null_value is None:
            raise ModelInconsistencyError("flag curve in an empty null set")
        verdicts.append(
            Verdict(
                "vertex_bound_mv_null",
                total <= mv_null_value,
                "%d <= %d" % (total, mv_null_value),
            )
        )
    p2 = m.pair(dec.positive, dec.positive)
    verdicts.append(
        Verdict("area", poly.area == p2 / 2, "area %s vs %s" % (poly.area, p2 / 2))
    )
    verdicts.append(
        Verdict(
            "alpha_nondecreasing",
            all(piece.slope >= 0 for piece in poly.alpha_pieces),
            "slopes %s" % ",".join(str(p.slope) for p in poly.alpha_pieces),
        )
    )
    return BoundReport(
        rho, rho_d, total, bound_a, mv_value, mv_null_value, tuple(verdicts)
    )
