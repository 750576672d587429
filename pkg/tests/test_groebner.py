"""Groebner bases, quotient dimensions and local multiplicities."""

import itertools
import random

from gmpy2 import mpq

import sympy

from e7st34 import Ring, parse_poly
from e7st34.groebner import (GREVLEX, MonomialOrder, buchberger,
                             local_multiplicity_at_origin, normal_form,
                             quotient_dimension)


def test_basis_reduces_generators_to_zero():
    ring = Ring(("x", "y", "z"))
    gens = [parse_poly(t, ring) for t in ("x^2 + y", "x*y - z", "y^3 - z^2")]
    gb = buchberger(gens)
    for g in gens:
        assert normal_form(g, gb.generators, gb.order).is_zero()


def test_spolynomials_reduce_to_zero():
    ring = Ring(("x", "y"))
    gens = [parse_poly(t, ring) for t in ("x^3 - 2*x*y", "x^2*y - 2*y^2 + x")]
    gb = buchberger(gens)
    key = gb.order.key
    for f, g in itertools.combinations(gb.generators, 2):
        ef, cf = f.leading(key)
        eg, cg = g.leading(key)
        lcm = tuple(max(a, b) for a, b in zip(ef, eg))
        mf = ring.monomial([a - b for a, b in zip(lcm, ef)], 1 / cf)
        mg = ring.monomial([a - b for a, b in zip(lcm, eg)], 1 / cg)
        s = f * mf - g * mg
        assert normal_form(s, gb.generators, gb.order).is_zero()


def test_quotient_dimension_order_independent():
    ring = Ring(("x", "y"))
    gens = [parse_poly(t, ring) for t in ("3*x^2*y", "x^3 + 3*y^2")]
    dims = set()
    for kind in ("grevlex", "lex", "grlex"):
        gb = buchberger(gens, MonomialOrder(kind))
        dims.add(quotient_dimension(gb))
    assert dims == {7}


def test_quotient_dimension_brute_force():
    # independent linear-algebra check; both generators are homogeneous for
    # the weights (2, 3), so a weighted truncation has no boundary losses
    x, y = sympy.symbols("x y")
    gens = [3 * x ** 2 * y, x ** 3 + 3 * y ** 2]
    cutoff = 30
    monos = [x ** i * y ** j for i in range(cutoff // 2 + 1)
             for j in range(cutoff // 3 + 1) if 2 * i + 3 * j <= cutoff]
    index = {m: k for k, m in enumerate(monos)}
    rows = []
    for g in gens:
        for m in monos:
            pg = sympy.Poly(m * g, x, y)
            if any(2 * t[0] + 3 * t[1] > cutoff for t, _ in pg.terms()):
                continue
            row = [0] * len(monos)
            for term, coeff in pg.terms():
                row[index[x ** term[0] * y ** term[1]]] = coeff
            rows.append(row)
    rank = sympy.Matrix(rows).rank()
    assert len(monos) - rank == 7


def test_quotient_dimension_infinite():
    ring = Ring(("x", "y"))
    gb = buchberger([parse_poly("x^2", ring)])
    assert quotient_dimension(gb) == "infinite"


def test_local_multiplicity_at_origin():
    ring = Ring(("x", "y"))
    # germ x^3 + y^4 has Milnor number 6 via its Jacobian ideal
    gens = [parse_poly("3*x^2", ring), parse_poly("4*y^3", ring)]
    assert local_multiplicity_at_origin(gens) == 6
    # an ideal whose zero locus through the origin is a curve
    assert local_multiplicity_at_origin([parse_poly("x*y", ring)]) == "infinite"


def test_local_multiplicity_ignores_far_points():
    ring = Ring(("x", "y"))
    # global dimension is 2 (points (0,0) and (1,1)); the origin only counts once
    gens = [parse_poly("x^2 - x", ring), parse_poly("y - x", ring)]
    assert local_multiplicity_at_origin(gens) == 1


def test_normal_form_is_linear():
    rng = random.Random(9)
    ring = Ring(("x", "y"))
    gens = [parse_poly("x^2 + y", ring), parse_poly("y^2 - 1", ring)]
    gb = buchberger(gens)
    for _ in range(20):
        a = ring.monomial([rng.randint(0, 3), rng.randint(0, 3)],
                          mpq(rng.randint(-5, 5), rng.randint(1, 3)))
        b = ring.monomial([rng.randint(0, 3), rng.randint(0, 3)],
                          mpq(rng.randint(-5, 5), rng.randint(1, 3)))
        nf = lambda p: normal_form(p, gb.generators, gb.order)
        assert nf(a + b) == nf(a) + nf(b)
