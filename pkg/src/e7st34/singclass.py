"""Singular points and ADE classification of surfaces g(x, y) - z^2."""

from dataclasses import dataclass

from gmpy2 import mpq

from .fields import FieldElem
from .groebner import (MonomialOrder, buchberger, local_multiplicity_at_origin,
                       quotient_dimension)
from .poly import Ring, gcd_univariate, rational_roots


class NonIsolatedError(Exception):
    """The singular locus is positive-dimensional."""


class UnsupportedShapeError(Exception):
    """The surface is not a suspension g(x, y) + c z^2."""


@dataclass(frozen=True)
class SingularityType:
    tag: str          # A | D | E | Smooth | NonIsolated | NotSimple
    index: int = 0

    def __post_init__(self):
        if self.tag == "A" and self.index < 1:
            raise ValueError("A_k needs k >= 1")
        if self.tag == "D" and self.index < 4:
            raise ValueError("D_k needs k >= 4")
        if self.tag == "E" and self.index not in (6, 7, 8):
            raise ValueError("E_k needs k in 6,7,8")

    def __str__(self):
        if self.tag in ("A", "D", "E"):
            return f"{self.tag}{self.index}"
        return self.tag


@dataclass(frozen=True)
class GermReport:
    point: tuple
    milnor: int
    type: SingularityType
    corank: int


def binary_cubic_root_structure(C):
    """Projective root structure of a binary cubic ax^3+bx^2y+cxy^2+dy^3.

    Returns one of "three-distinct", "one-double", "triple", "zero".
    """
    if C.is_zero():
        return "zero"
    if C.degree() != 3 or any(sum(e) != 3 for e in C.terms):
        raise ValueError("not a homogeneous cubic")
    used = sorted({i for e in C.terms for i, k in enumerate(e) if k})
    if len(used) > 2:
        raise ValueError("more than two variables")
    iu = used[0]
    iv = used[1] if len(used) > 1 else (iu + 1) % C.ring.nvars

    def coeff(i, j):
        e = [0] * C.ring.nvars
        e[iu], e[iv] = i, j
        return C.terms.get(tuple(e), C.ring.field.zero)

    a, b, c, d = coeff(3, 0), coeff(2, 1), coeff(1, 2), coeff(0, 3)
    disc = (18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2)
    if not _is_zero_scalar(C.ring, disc):
        return "three-distinct"
    if _is_zero_scalar(C.ring, b * b - 3 * a * c) and _is_zero_scalar(C.ring, c * c - 3 * b * d):
        return "triple"
    return "one-double"


def _is_zero_scalar(ring, c):
    return ring.field.is_zero(c)


def field_roots(p, var):
    """Roots of a univariate polynomial in the coefficient field (no multiplicities).

    Degree-1 fields use rational root extraction; degree-2 extensions solve
    for roots a + b*g by splitting into a two-variable rational system.
    """
    ring = p.ring
    field = ring.field
    if p.is_zero():
        raise ValueError("zero polynomial")
    if field.degree == 1:
        return [r for r, _ in rational_roots(p, var)]
    if field.degree != 2:
        raise ValueError("root finding only over Q and quadratic extensions")
    # substitute var -> A + B*g and split coordinates
    rab = Ring(("A_", "B_"), field)
    img = rab.gen("A_") + rab.gen("B_") * field.gen
    q = p.substitute({var: img} | {v: rab.zero() for v in ring.vars if v != var}, ring=rab)
    rq = Ring(("A_", "B_"))
    comp0 = q.map_coefficients(lambda c: c.coords[0], ring=rq)
    comp1 = q.map_coefficients(lambda c: c.coords[1], ring=rq)
    sols = rational_points_2d([g for g in (comp0, comp1) if not g.is_zero()])
    if sols == "infinite":
        raise ValueError("unexpected positive-dimensional root system")
    return [field(a) + field(b) * field.gen for a, b in sols]


def rational_points_2d(gens):
    """All common zeros in K^2 of polynomials in a 2-variable ring over K=Q.

    Returns a sorted list of coordinate pairs, or "infinite" when the ideal
    is not zero-dimensional.
    """
    ring = gens[0].ring
    if ring.nvars != 2:
        raise ValueError("expected a 2-variable ring")
    u, v = ring.vars
    gb = buchberger(gens)
    if quotient_dimension(gb) == "infinite":
        return "infinite"
    lex_elim = MonomialOrder("lex", perm=(1, 0))  # v > u: eliminate v
    gb_lex = buchberger(gens, lex_elim)
    in_u = [g for g in gb_lex if not (g.vars_used() - {u})]
    if not in_u:
        return []
    pu = in_u[0]
    for g in in_u[1:]:
        pu = gcd_univariate(pu, g, u)
    points = []
    for u0 in field_roots(pu, u) if ring.field.degree > 1 else [r for r, _ in rational_roots(pu, u)]:
        qv = None
        for g in gb_lex:
            gv = g.substitute({u: ring.const(u0)})
            if gv.is_zero():
                continue
            if gv.vars_used() - {v}:
                raise AssertionError("lex elimination left a mixed polynomial")
            qv = gv if qv is None else gcd_univariate(qv, gv, v)
        if qv is None or qv.is_zero():
            return "infinite"
        if qv.is_constant():
            continue
        roots_v = field_roots(qv, v) if ring.field.degree > 1 else [r for r, _ in rational_roots(qv, v)]
        for v0 in roots_v:
            if all(g.evaluate({u: u0, v: v0}) == 0 or ring.field.is_zero(g.evaluate({u: u0, v: v0}))
                   for g in gens):
                points.append((u0, v0))
    points.sort(key=_point_key)
    return points


def _point_key(pt):
    out = []
    for c in pt:
        if isinstance(c, FieldElem):
            out.extend(c.coords)
        else:
            out.append(c)
    return tuple(out)


def find_rational_singular_points(g):
    """Solutions of g = g_x = g_y = 0 over the coefficient field, plus completeness.

    The completeness flag is true when the local multiplicities of the
    Tjurina ideal at the found points account for its whole quotient
    dimension (i.e. no singular point was missed in an extension field).
    """
    if g.is_zero():
        raise ValueError("zero polynomial")
    ring = g.ring
    if ring.nvars != 2:
        raise ValueError("expected g in two variables")
    u, v = ring.vars
    tjurina = [g, g.derivative(u), g.derivative(v)]
    gb = buchberger(tjurina)
    total = quotient_dimension(gb)
    if total == "infinite":
        raise NonIsolatedError("the singular locus is not isolated")
    if total == 0:
        return [], True
    points = _common_zeros(tjurina)
    if points == "infinite":
        raise NonIsolatedError("the singular locus is not isolated")
    local_sum = 0
    for pt in points:
        shifted = [t.substitute({u: ring.gen(u) + ring.const(pt[0]),
                                 v: ring.gen(v) + ring.const(pt[1])}) for t in tjurina]
        m = local_multiplicity_at_origin(shifted)
        if m == "infinite":
            raise NonIsolatedError("the singular locus is not isolated")
        local_sum += m
    return points, local_sum == total


def _common_zeros(gens):
    ring = gens[0].ring
    if ring.field.degree == 1:
        return rational_points_2d(gens)
    # same elimination scheme, with roots taken in the quadratic extension
    u, v = ring.vars
    gb = buchberger(gens)
    if quotient_dimension(gb) == "infinite":
        return "infinite"
    gb_lex = buchberger(gens, MonomialOrder("lex", perm=(1, 0)))
    in_u = [g for g in gb_lex if not (g.vars_used() - {u})]
    if not in_u:
        return []
    pu = in_u[0]
    for g in in_u[1:]:
        pu = gcd_univariate(pu, g, u)
    points = []
    for u0 in field_roots(pu, u):
        qv = None
        for g in gb_lex:
            gv = g.substitute({u: ring.const(u0)})
            if gv.is_zero():
                continue
            qv = gv if qv is None else gcd_univariate(qv, gv, v)
        if qv is None or qv.is_zero():
            return "infinite"
        if qv.is_constant():
            continue
        for v0 in field_roots(qv, v):
            if all(ring.field.is_zero(ring.field(g.evaluate({u: u0, v: v0}))) for g in gens):
                points.append((u0, v0))
    points.sort(key=_point_key)
    return points


def classify_germ(g, point):
    """ADE type of the germ of g at the given point."""
    ring = g.ring
    u, v = ring.vars
    u0, v0 = (ring.coerce_scalar(c) for c in point)
    g0 = g.substitute({u: ring.gen(u) + ring.const(u0), v: ring.gen(v) + ring.const(v0)})
    zero = ring.field.is_zero
    gx, gy = g0.derivative(u), g0.derivative(v)
    if not (zero(g0.constant_coeff()) and zero(gx.constant_coeff()) and zero(gy.constant_coeff())):
        return GermReport((u0, v0), 0, SingularityType("Smooth"), 0)
    mu = local_multiplicity_at_origin([gx, gy])
    if mu == "infinite":
        return GermReport((u0, v0), 0, SingularityType("NonIsolated"), 2)
    hxx = gx.derivative(u).constant_coeff()
    hxy = gx.derivative(v).constant_coeff()
    hyy = gy.derivative(v).constant_coeff()
    det_h = hxx * hyy - hxy * hxy
    if not zero(det_h):
        corank = 0
    elif not (zero(hxx) and zero(hxy) and zero(hyy)):
        corank = 1
    else:
        corank = 2
    if corank == 0:
        return GermReport((u0, v0), mu, SingularityType("A", 1), 0)
    if corank == 1:
        return GermReport((u0, v0), mu, SingularityType("A", mu), 1)
    cubic = _jet(g0, 3)
    structure = binary_cubic_root_structure(cubic)
    if structure == "three-distinct":
        return GermReport((u0, v0), mu, SingularityType("D", mu), 2)
    if structure == "one-double":
        return GermReport((u0, v0), mu, SingularityType("D", mu), 2)
    if mu in (6, 7, 8):
        return GermReport((u0, v0), mu, SingularityType("E", mu), 2)
    return GermReport((u0, v0), mu, SingularityType("NotSimple"), 2)


def _jet(p, degree):
    """The homogeneous part of the given total degree."""
    from .poly import MPoly
    return MPoly(p.ring, {e: c for e, c in p.terms.items() if sum(e) == degree})


def suspension_split(f):
    """Split f = g(u, v) + c * s^2; returns (g in a 2-variable ring, s, c).

    The suspension variable must occur only as a squared term with constant
    coefficient.
    """
    ring = f.ring
    if ring.nvars != 3:
        raise UnsupportedShapeError("expected a 3-variable surface")
    candidates = []
    for s in reversed(ring.vars):
        i = ring.index[s]
        degs = {e[i] for e in f.terms if e[i]}
        if degs == {2}:
            csq = f.coeff_in(s, 2)
            if csq.is_constant() and not csq.is_zero():
                candidates.append((s, csq.constant_coeff()))
    if not candidates:
        raise UnsupportedShapeError("surface is not a suspension g(x,y) + c*z^2")
    s, c = candidates[0]
    rest = [v for v in ring.vars if v != s]
    r2 = Ring(tuple(rest), ring.field)
    g2 = f.substitute({v: r2.gen(v) for v in rest} | {s: r2.zero()}, ring=r2)
    return g2, s, c


def classify_surface(f):
    """Germ reports for every rational singular point of f = g(x,y) + c z^2."""
    g2, s, _c = suspension_split(f)
    points, complete = find_rational_singular_points(g2)
    reports = []
    si = f.ring.index[s]
    for pt in points:
        rep = classify_germ(g2, pt)
        coords = list(rep.point)
        coords.insert(si, f.ring.field.zero if f.ring.field.degree > 1 else mpq(0))
        reports.append(GermReport(tuple(coords), rep.milnor, rep.type, rep.corank))
    return reports, complete
