"""Parametric path tracer and polygon assembly for D - t*C.

trace_path splits [nu, mu] into chamber segments on which the negative
part of D - t*C has constant support and coefficients affine in t.  Wall
events are located exactly from the affine laws; the right endpoint mu is
the smallest root of the residual's self-intersection, which can live in a
quadratic extension.  boundary_functions turns a traced path into the
piecewise-affine lower/upper boundaries, and polygon takes the convex hull
of the breakpoint points.

Support monotonicity along the path is not assumed: coefficient-vanishing
events are handled like any other wall.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, ModelInconsistencyError, NotPseudoeffectiveError
from .exactnum import QuadNumber, quad_solve
from .model import DivisorClass, FlagSpec, SurfaceModel, validate_flag
from .zariski import ZariskiDecomposition, positivity, zariski_decompose

_PROBE_LIMIT = 80


@dataclass(frozen=True)
class AffineClass:
    """Class-valued affine map t -> base + t * slope."""

    base: DivisorClass
    slope: DivisorClass

    def at(self, t: Fraction) -> DivisorClass:
        return self.base + self.slope.scale(t)

    def at_quad(self, t: QuadNumber) -> tuple[QuadNumber, ...]:
        return tuple(
            QuadNumber.of(b) + t * QuadNumber.of(s)
            for b, s in zip(self.base.coords, self.slope.coords)
        )


@dataclass(frozen=True)
class ChamberSegment:
    """Maximal open interval with constant negative-part support.

    coeff_affine maps each support curve to (c0, c1) with a_i(t) = c0 + c1*t.
    t_hi is rational except possibly on the final segment.
    """

    t_lo: Fraction
    t_hi: QuadNumber
    support: tuple[str, ...]
    coeff_affine: tuple[tuple[str, tuple[Fraction, Fraction]], ...]
    p_affine: AffineClass

    def coeff_at(self, name: str, t: Fraction) -> Fraction:
        for n, (c0, c1) in self.coeff_affine:
            if n == name:
                return c0 + c1 * t
        return Fraction(0)


@dataclass(frozen=True)
class Wall:
    """Support change between two consecutive segments."""

    t: Fraction
    entering: tuple[str, ...]
    leaving: tuple[str, ...]


@dataclass(frozen=True)
class TracedPath:
    divisor: DivisorClass
    flag_curve: str
    nu: Fraction
    mu: QuadNumber
    segments: tuple[ChamberSegment, ...]
    walls: tuple[Wall, ...]
    decomposition_at_zero: ZariskiDecomposition


def _affine_law(
    D: DivisorClass, c_cls: DivisorClass, m: SurfaceModel, support: Sequence[str]
) -> tuple[tuple[tuple[str, tuple[Fraction, Fraction]], ...], AffineClass]:
    """Solve the support Gram system with right-hand side affine in t."""
    from . import linalg

    records = [m.curve(n) for n in support]
    gram = [[m.pair(a.cls, b.cls) for b in records] for a in records]
    d0 = [m.pair(D, r.cls) for r in records]
    d1 = [-m.pair(c_cls, r.cls) for r in records]
    u = linalg.solve_linear(gram, d0)
    v = linalg.solve_linear(gram, d1)
    if u is None or v is None:
        raise ModelInconsistencyError(
            "singular Gram on probed support {%s}" % ", ".join(support)
        )
    p0 = D
    p1 = -c_cls
    for r, c0, c1 in zip(records, u, v):
        p0 = p0 - r.cls.scale(c0)
        p1 = p1 - r.cls.scale(c1)
    law = tuple((r.name, (c0, c1)) for r, c0, c1 in zip(records, u, v))
    return law, AffineClass(p0, p1)


def _law_valid_at(
    law, p_aff: AffineClass, m: SurfaceModel, t: Fraction
) -> bool:
    """Coefficients nonnegative and residual nef against all declared curves."""
    for _, (c0, c1) in law:
        if c0 + c1 * t < 0:
            return False
    p = p_aff.at(t)
    return all(m.pair(p, c.cls) >= 0 for c in m.curves)


def _law_matches_decomposition(
    law, p_aff: AffineClass, dec: ZariskiDecomposition, t: Fraction
) -> bool:
    names = {n for n, _ in law}
    if set(dec.support_names()) - names:
        return False
    for n, (c0, c1) in law:
        if c0 + c1 * t != dec.coeff(n):
            return False
    return p_aff.at(t) == dec.positive


def _probe_segment(
    D: DivisorClass,
    flag_name: str,
    m: SurfaceModel,
    t_start: Fraction,
):
    """Support and affine laws valid on an interval just right of t_start.

    Probes t_start + 2^-k, accepting once two consecutive probes agree on
    a support whose affine law reproduces both decompositions and stays
    valid back to t_start (so no shorter segment was skipped).
    """
    c_cls = m.curve(flag_name).cls
    prev: tuple[tuple[str, ...], Fraction, ZariskiDecomposition] | None = None
    for k in range(1, _PROBE_LIMIT + 1):
        tp = t_start + Fraction(1, 2**k)
        try:
            dec = zariski_decompose(D - c_cls.scale(tp), m)
        except NotPseudoeffectiveError:
            prev = None
            continue
        support = dec.support_names()
        if flag_name in support:
            raise ModelInconsistencyError(
                "flag curve %r re-enters the negative part at t > %s"
                % (flag_name, t_start)
            )
        if prev is not None and prev[0] == support:
            law, p_aff = _affine_law(D, c_cls, m, support)
            if (
                _law_matches_decomposition(law, p_aff, dec, tp)
                and _law_matches_decomposition(law, p_aff, prev[2], prev[1])
                and _law_valid_at(law, p_aff, m, t_start)
            ):
                return support, law, p_aff
        prev = (support, tp, dec)
    raise ModelInconsistencyError(
        "support did not stabilise after the wall at t = %s" % t_start
    )


def _smallest_quadratic_root_after(
    q2: Fraction, q1: Fraction, q0: Fraction, t: Fraction
) -> QuadNumber | None:
    """Smallest root of q2 x^2 + q1 x + q0 = 0 strictly beyond t, if any."""
    if q2 == 0 and q1 == 0:
        return None
    if q2 == 0:
        r = QuadNumber(-q0 / q1)
        return r if r > t else None
    disc = q1 * q1 - 4 * q2 * q0
    if disc < 0:
        return None
    lo = quad_solve(q2, q1, q0, "smaller")
    if lo > t:
        return lo
    hi = quad_solve(q2, q1, q0, "larger")
    return hi if hi > t else None


def trace_path(D: DivisorClass, curve: str, m: SurfaceModel) -> TracedPath:
    """Chamber segments of t -> D - t*C on [nu, mu], plus nu and mu.

    Requires D big in the model and C declared.  Events are (a) a declared
    curve's pairing with the residual crossing zero downward, (b) a support
    coefficient vanishing, (c) the residual's self-intersection reaching
    zero, which defines mu.
    """
    c_rec = m.curve(curve)
    c_cls = c_rec.cls
    if not positivity(D, m).big:
        raise DomainError("divisor is not big in the model")
    dec0 = zariski_decompose(D, m)
    nu = dec0.coeff(curve)

    segments: list[ChamberSegment] = []
    walls: list[Wall] = []
    t_cur = nu
    prev_segment: ChamberSegment | None = None
    mu: QuadNumber | None = None

    while True:
        support, law, p_aff = _probe_segment(D, curve, m, t_cur)

        if prev_segment is not None:
            # continuity across the wall: both affine laws must agree at t_cur
            if prev_segment.p_affine.at(t_cur) != p_aff.at(t_cur):
                raise ModelInconsistencyError(
                    "residual is discontinuous across the wall at t = %s" % t_cur
                )
            shared = set(support) | set(prev_segment.support)
            for name in shared:
                before = prev_segment.coeff_at(name, t_cur)
                after = next(
                    (c0 + c1 * t_cur for n, (c0, c1) in law if n == name),
                    Fraction(0),
                )
                if before != after:
                    raise ModelInconsistencyError(
                        "coefficient of %r jumps across the wall at t = %s"
                        % (name, t_cur)
                    )

        # wall candidates from nef constraints of curves outside the support
        in_support = set(support)
        wall_times: list[Fraction] = []
        for rec in m.curves:
            if rec.name in in_support:
                continue
            f0 = m.pair(p_aff.base, rec.cls)
            f1 = m.pair(p_aff.slope, rec.cls)
            if f1 < 0:
                root = -f0 / f1
                if root > t_cur:
                    wall_times.append(root)
        # wall candidates from coefficients vanishing
        for _, (c0, c1) in law:
            if c1 < 0:
                root = -c0 / c1
                if root > t_cur:
                    wall_times.append(root)

        q2 = m.pair(p_aff.slope, p_aff.slope)
        q1 = 2 * m.pair(p_aff.base, p_aff.slope)
        q0 = m.pair(p_aff.base, p_aff.base)
        mu_candidate = _smallest_quadratic_root_after(q2, q1, q0, t_cur)

        first_wall = min(wall_times) if wall_times else None
        if mu_candidate is None and first_wall is None:
            raise ModelInconsistencyError(
                "path never leaves the big cone beyond t = %s" % t_cur
            )

        if first_wall is None or (
            mu_candidate is not None and mu_candidate <= first_wall
        ):
            seg = ChamberSegment(t_cur, mu_candidate, support, law, p_aff)
            segments.append(seg)
            mu = mu_candidate
            break

        seg = ChamberSegment(t_cur, QuadNumber(first_wall), support, law, p_aff)
        segments.append(seg)
        prev_segment = seg
        t_cur = first_wall

    for before, after in zip(segments, segments[1:]):
        t_w = after.t_lo
        entering = tuple(n for n in after.support if n not in before.support)
        leaving = tuple(n for n in before.support if n not in after.support)
        walls.append(Wall(t_w, entering, leaving))

    assert mu is not None
    if not (mu > nu):
        raise ModelInconsistencyError("mu = %s does not exceed nu = %s" % (mu, nu))
    return TracedPath(D, curve, nu, mu, tuple(segments), tuple(walls), dec0)


@dataclass(frozen=True)
class LinearPiece:
    """value_lo + slope * (t - t_lo) on [t_lo, t_hi]."""

    t_lo: Fraction
    t_hi: QuadNumber
    value_lo: Fraction
    slope: Fraction

    def at(self, t: Fraction) -> Fraction:
        return self.value_lo + self.slope * (t - self.t_lo)

    def at_quad(self, t: QuadNumber) -> QuadNumber:
        return QuadNumber.of(self.value_lo) + (t - self.t_lo) * QuadNumber.of(self.slope)


@dataclass(frozen=True)
class BreakCause:
    """Diagnosis of one interior breakpoint.

    lower/upper are the dual-graph predictions: a kink on the lower
    boundary needs an entering curve in the connected component of the new
    support that passes through the flag point, a kink on the upper one an
    entering curve in a component meeting the flag curve away from the
    point.  alpha_kink/beta_kink record the observed slope changes.
    """

    t: Fraction
    entering: tuple[str, ...]
    leaving: tuple[str, ...]
    lower: bool
    upper: bool
    alpha_kink: bool
    beta_kink: bool

    @property
    def side(self) -> str:
        if self.lower and self.upper:
            return "both"
        if self.lower:
            return "lower"
        if self.upper:
            return "upper"
        return "none"


@dataclass(frozen=True)
class BoundaryData:
    path: TracedPath
    alpha_pieces: tuple[LinearPiece, ...]
    beta_pieces: tuple[LinearPiece, ...]
    causes: tuple[BreakCause, ...]

    def alpha_at(self, t):
        return _eval_pieces(self.alpha_pieces, t)

    def beta_at(self, t):
        return _eval_pieces(self.beta_pieces, t)


def _eval_pieces(pieces: Sequence[LinearPiece], t):
    if isinstance(t, QuadNumber) and not t.is_rational:
        return pieces[-1].at_quad(t)
    if isinstance(t, QuadNumber):
        t = t.as_fraction()
    for piece in pieces:
        if piece.t_hi >= t:
            if t >= piece.t_lo:
                return piece.at(t)
    raise DomainError("t = %s outside the traced interval" % t)


def _support_components(
    support: Sequence[str], m: SurfaceModel
) -> list[set[str]]:
    adj = {n: set() for n in support}
    for i, a in enumerate(support):
        for b in support[i + 1 :]:
            if m.pair(m.curve(a).cls, m.curve(b).cls) > 0:
                adj[a].add(b)
                adj[b].add(a)
    seen: set[str] = set()
    comps = []
    for n in support:
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
        comps.append(comp)
    return comps


def boundary_functions(
    D: DivisorClass, flag: FlagSpec, m: SurfaceModel
) -> BoundaryData:
    """Piecewise-affine lower/upper boundaries with breakpoint causes.

    alpha(t) is the multiplicity of the negative part at the flag point,
    i.e. the local-multiplicity-weighted sum of its coefficients; beta
    adds the pairing of the flag curve with the residual.
    """
    validate_flag(flag, m)
    path = trace_path(D, flag.curve, m)
    c_cls = m.curve(flag.curve).cls

    alpha_pieces: list[LinearPiece] = []
    beta_pieces: list[LinearPiece] = []
    for seg in path.segments:
        a0 = Fraction(0)
        a1 = Fraction(0)
        for name, (c0, c1) in seg.coeff_affine:
            mult = flag.mult(name)
            if mult:
                a0 += c0 * mult
                a1 += c1 * mult
        b0 = a0 + m.pair(c_cls, seg.p_affine.base)
        b1 = a1 + m.pair(c_cls, seg.p_affine.slope)
        alpha_pieces.append(
            LinearPiece(seg.t_lo, seg.t_hi, a0 + a1 * seg.t_lo, a1)
        )
        beta_pieces.append(LinearPiece(seg.t_lo, seg.t_hi, b0 + b1 * seg.t_lo, b1))

    causes: list[BreakCause] = []
    for wall, before_a, after_a, before_b, after_b, seg_after in zip(
        path.walls,
        alpha_pieces,
        alpha_pieces[1:],
        beta_pieces,
        beta_pieces[1:],
        path.segments[1:],
    ):
        comps = _support_components(seg_after.support, m)
        lower = False
        upper = False
        for comp in comps:
            if not any(n in comp for n in wall.entering):
                continue
            if any(flag.mult(n) > 0 for n in comp):
                lower = True
            if any(
                m.pair(m.curve(n).cls, c_cls) - flag.mult(n) > 0 for n in comp
            ):
                upper = True
        causes.append(
            BreakCause(
                wall.t,
                wall.entering,
                wall.leaving,
                lower,
                upper,
                before_a.slope != after_a.slope,
                before_b.slope != after_b.slope,
            )
        )
    return BoundaryData(path, tuple(alpha_pieces), tuple(beta_pieces), tuple(causes))


# -- convex hull over a single quadratic extension ----------------------


def _cross_sign(o, a, b) -> int:
    v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return v.sign()


def convex_hull_ccw(points):
    """Strict convex hull in counterclockwise order, collinear points merged.

    Starts at the lexicographically smallest vertex.  Exact arithmetic;
    coordinates may mix rationals with one quadratic extension.
    """
    pts = sorted(set(points), key=lambda p: (p[0], p[1]))
    if len(pts) <= 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross_sign(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross_sign(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class Census:
    total: int
    leftmost: int
    interior: int
    rightmost: int


@dataclass(frozen=True)
class OkounkovPolygon:
    """Exact polygon data: boundaries, vertices, classes, causes, area."""

    nu: Fraction
    mu: QuadNumber
    alpha_pieces: tuple[LinearPiece, ...]
    beta_pieces: tuple[LinearPiece, ...]
    vertices: tuple[tuple[QuadNumber, QuadNumber], ...]
    vertex_classes: tuple[str, ...]
    causes: tuple[BreakCause, ...]
    area: Fraction

    def census(self) -> Census:
        return Census(
            len(self.vertices),
            sum(1 for c in self.vertex_classes if c == "leftmost"),
            sum(1 for c in self.vertex_classes if c == "interior"),
            sum(1 for c in self.vertex_classes if c == "rightmost"),
        )


def polygon(D: DivisorClass, flag: FlagSpec, m: SurfaceModel) -> OkounkovPolygon:
    """The polygon between alpha and beta over [nu, mu].

    Vertices are the convex hull of the boundary values at all breakpoints;
    collinear breakpoints are kept in the piece lists but are not vertices.
    """
    bd = boundary_functions(D, flag, m)
    path = bd.path

    breakpoints: list[QuadNumber] = [QuadNumber(path.nu)]
    for wall in path.walls:
        breakpoints.append(QuadNumber(wall.t))
    breakpoints.append(path.mu)

    pts = []
    for t in breakpoints:
        a = QuadNumber.of(bd.alpha_at(t))
        b = QuadNumber.of(bd.beta_at(t))
        pts.append((t, a))
        pts.append((t, b))
    hull = convex_hull_ccw(pts)

    classes = []
    for x, _ in hull:
        if x == path.nu:
            classes.append("leftmost")
        elif x == path.mu:
            classes.append("rightmost")
        else:
            classes.append("interior")

    area2 = QuadNumber(Fraction(0))
    n = len(hull)
    for i in range(n):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % n]
        area2 = area2 + (x1 * y2 - x2 * y1)
    if not area2.is_rational:
        raise ModelInconsistencyError("polygon area is irrational")
    area = area2.as_fraction() / 2
    if area < 0:
        area = -area

    return OkounkovPolygon(
        path.nu,
        path.mu,
        bd.alpha_pieces,
        bd.beta_pieces,
        tuple(hull),
        tuple(classes),
        bd.causes,
        area,
    )


def vertex_census(p: OkounkovPolygon) -> Census:
    """Vertex counts by abscissa: at nu, strictly inside, at mu."""
    return p.census()
