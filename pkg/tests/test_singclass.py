"""ADE classification of suspension surface germs."""

import pytest
from gmpy2 import mpq

from e7st34 import QW, Ring, parse_poly
from e7st34.singclass import (NonIsolatedError, UnsupportedShapeError,
                              classify_surface, suspension_split)

R3 = Ring(("x", "y", "z"))

NORMAL_FORMS = [
    ("x^2 + y^2 + z^2", "A1", 1, 0),
    ("x^3 + y^2 + z^2", "A2", 2, 1),
    ("x^4 + y^2 + z^2", "A3", 3, 1),
    ("x^7 + y^2 + z^2", "A6", 6, 1),
    ("x^3 + x*y^2 + z^2", "D4", 4, 2),
    ("x^4 + x*y^2 + z^2", "D5", 5, 2),
    ("x^5 + x*y^2 + z^2", "D6", 6, 2),
    ("x^3 + y^4 + z^2", "E6", 6, 2),
    ("x^3 + x*y^3 + z^2", "E7", 7, 2),
    ("x^3 + y^5 + z^2", "E8", 8, 2),
]


def classify_one(text, ring=R3):
    reports, complete = classify_surface(parse_poly(text, ring))
    assert complete
    assert len(reports) == 1
    return reports[0]


def test_normal_forms():
    for text, typ, mu, corank in NORMAL_FORMS:
        rep = classify_one(text)
        assert str(rep.type) == typ, text
        assert rep.milnor == mu, text
        assert rep.corank == corank, text
        assert rep.point == (mpq(0), mpq(0), mpq(0))


def test_smooth_surface_has_no_reports():
    reports, complete = classify_surface(parse_poly("x + y^2 + z^2", R3))
    assert reports == [] and complete


def test_translation_of_the_singular_point():
    # A2 germ moved to (1, -2)
    x, y, z = R3.gen("x"), R3.gen("y"), R3.gen("z")
    g = (x - 1) ** 3 + (y + 2) ** 2 + z ** 2
    reports, complete = classify_surface(g)
    assert complete and len(reports) == 1
    rep = reports[0]
    assert str(rep.type) == "A2"
    assert rep.point == (mpq(1), mpq(-2), mpq(0))


def test_linear_change_invariance():
    # substitute x -> x + 2y, y -> y - x into the E6 form
    g = parse_poly("x^3 + y^4 + z^2", R3)
    h = g.substitute({"x": parse_poly("x + 2*y", R3),
                      "y": parse_poly("y - x", R3),
                      "z": R3.gen("z")}, ring=R3)
    rep = classify_one(str(h))
    assert str(rep.type) == "E6"
    assert rep.milnor == 6


def test_scaling_invariance():
    for text, typ, mu, _corank in NORMAL_FORMS:
        g = parse_poly(text, R3) * mpq(5, 3)
        reports, complete = classify_surface(g)
        assert complete and len(reports) == 1
        assert str(reports[0].type) == typ and reports[0].milnor == mu


def test_two_singular_points():
    # A1 at (0,0) and A2 at (1,0) on the suspended curve x^2*(x-1)^3 + y^2
    x, y, z = R3.gen("x"), R3.gen("y"), R3.gen("z")
    g = x ** 2 * (x - 1) ** 3 + y ** 2 + z ** 2
    reports, complete = classify_surface(g)
    assert complete
    got = sorted((str(r.type), r.point) for r in reports)
    assert [t for t, _ in got] == ["A1", "A2"]
    points = {t: p for t, p in got}
    assert points["A1"] == (mpq(0), mpq(0), mpq(0))
    assert points["A2"] == (mpq(1), mpq(0), mpq(0))


def test_qw_germ():
    ring = Ring(("x", "y", "z"), QW)
    rep_reports, complete = classify_surface(parse_poly("x^3 + w*y^2 + z^2", ring))
    assert complete and len(rep_reports) == 1
    assert str(rep_reports[0].type) == "A2"


def test_non_isolated_raises():
    with pytest.raises(NonIsolatedError):
        classify_surface(parse_poly("x^2*y^2 + z^2", R3))


def test_unsupported_shape_raises():
    with pytest.raises(UnsupportedShapeError):
        classify_surface(parse_poly("x^3 + y^3 + z^3", R3))


def test_suspension_split():
    g2, s, c = suspension_split(parse_poly("x^3 + y^4 - 2*z^2", R3))
    assert s == "z" and c == mpq(-2)
    assert g2 == parse_poly("x^3 + y^4", g2.ring)
