"""End-to-end acceptance suite; one test (and one pass/fail line) per criterion."""

import random

from gmpy2 import mpq

from e7st34 import QW, Ring, parse_poly
from e7st34.discrim import (PARAM_WEIGHTS, compare_matrix_B, delta_st34,
                            delta_tilde, delta_tilde_0, matrix_A,
                            matrix_B_computed, matrix_B_published,
                            verify_uv_points)
from e7st34.e7family import (FamilyParams, case_eta, case_vector, f_curve,
                             f_family, family_solutions, lambda_case,
                             pq_to_st, psi_poly, shioda_phi, st34_tau,
                             st_to_pq)
from e7st34.groebner import buchberger, quotient_dimension
from e7st34.singclass import classify_surface

ADJACENCY_TYPES = {
    1: ["D6"], 2: ["A6"], 3: ["A1", "A5"], 4: ["A1", "A2", "A3"],
    5: ["A2", "A4"], 6: ["A1", "D5"], 7: ["E6"],
}

ST34_TYPES = {
    1: ["A2", "A3"], 2: ["A1", "D5"], 3: ["E6"],
    4: ["A5"], 5: ["A1", "A4"], 6: ["D6"],
}

ST34_POINTS = {
    1: {"A3": (mpq(9), mpq(-144), mpq(0)), "A2": (mpq(-243), mpq(-2916), mpq(0))},
    2: {"D5": (mpq(0), mpq(0), mpq(0)), "A1": (mpq(-9), mpq(-18), mpq(0))},
    5: {"A4": (mpq(-1728), mpq(-139968), mpq(0)),
        "A1": (mpq(3375), mpq(-109350), mpq(0))},
}


def _types_and_points(f):
    reports, complete = classify_surface(f)
    assert complete
    return sorted(str(r.type) for r in reports), {str(r.type): r.point for r in reports}


def test_criterion_1_adjacency_table():
    for i in range(1, 8):
        types, _ = _types_and_points(f_curve(lambda_case(i, eta=1)))
        assert types == ADJACENCY_TYPES[i], f"case {i}"
    print("criterion 1 (adjacency table): PASS")


def test_criterion_2_st34_table():
    for i in range(1, 7):
        field = QW if i == 4 else None
        ring = None
        if field is not None:
            from e7st34.e7family import curve_ring
            ring = curve_ring(field)
        types, points = _types_and_points(f_family(st34_tau(i, eta=1), ring))
        assert types == ST34_TYPES[i], f"case {i}"
        for typ, pt in ST34_POINTS.get(i, {}).items():
            assert points[typ] == pt, f"case {i} {typ}"
    # case 4: A5 at (-9(1+2w), 27(2+w), 0) over Q(w)
    from e7st34.e7family import curve_ring
    _, points = _types_and_points(f_family(st34_tau(4, eta=1), curve_ring(QW)))
    w = QW.gen
    assert points["A5"] == (QW(-9) * (1 + 2 * w), QW(27) * (2 + w), QW.zero)
    print("criterion 2 (ST34 table): PASS")


def test_criterion_3_discriminant_pipeline():
    dt = delta_tilde()
    ds = delta_st34()
    assert dt.degree_in("t7") == 7 and dt.coeff_in("t7", 7) == dt.ring.one()
    assert dt.weighted_degree(PARAM_WEIGHTS) == 98  # doubled weight for 49
    # the published specialized matrix, up to its single documented misprint
    assert compare_matrix_B() == [(4, 4)]
    bp, bc = matrix_B_published(), matrix_B_computed()
    for i in range(7):
        for j in range(7):
            if (i + 1, j + 1) != (4, 4):
                assert bp[i, j] == bc[i, j]
    # displayed det(B) expansion matches through its displayed terms
    d0 = delta_tilde_0()
    assert d0.coeff_in("t7", 7) == d0.ring.one()
    assert d0.coeff_in("t7", 5) == parse_poly("-225/343*s3^3*t5", d0.ring)
    # delta_tilde at s3=0 equals t7 * delta_st34
    ring = dt.ring
    slice0 = dt.substitute(
        {v: (ring.zero() if v == "s3" else ring.gen(v)) for v in ring.vars}, ring=ring)
    assert slice0 == ring.gen("t7") * ds
    assert ds.degree_in("t7") == 6 and ds.coeff_in("t7", 6) == ring.one()
    # t4^3 divides the t7 = 0 slice of delta_st34
    ds0 = ds.substitute(
        {v: (ring.zero() if v == "t7" else ring.gen(v)) for v in ring.vars}, ring=ring)
    ds0.exact_divide(ring.gen("t4") ** 3)
    print("criterion 3 (discriminant pipeline): PASS")


def test_criterion_4_point_formula_congruences():
    assert verify_uv_points() == {"f0": True, "dx_f0": True,
                                  "dy_f0": True, "dz_f0": True}
    print("criterion 4 (point-formula congruences): PASS")


def test_criterion_5_shioda_identity():
    for i in range(1, 8):
        lam = lambda_case(i, eta=case_eta(i, 1))
        assert shioda_phi(lam) == psi_poly(case_vector(i, 1)), f"case {i}"
    print("criterion 5 (spectral identity): PASS")


def test_criterion_6_parameter_maps():
    for i in range(1, 8):
        lam_sym = lambda_case(i)
        for sol in family_solutions(i):
            assert st_to_pq(sol) == lam_sym, f"case {i} symbolic"
        _, sols = pq_to_st(lambda_case(i, eta=1))
        for row in family_solutions(i, eta=1):
            assert row in sols, f"case {i} recovery"
    print("criterion 6 (parameter maps): PASS")


def test_criterion_7_wdvv_suite():
    from e7st34.wdvv import (b7_is_identity, commutator_defects, potential,
                             transform_and_compare)
    assert b7_is_identity()
    assert commutator_defects() == []
    pot = potential()
    assert pot.F.euler() == pot.F * mpq(15, 7)
    kappa = transform_and_compare(delta_tilde())
    assert bool(kappa)
    print("criterion 7 (potential suite): PASS")


def test_criterion_8_vanishing_consistency():
    ds = delta_st34()
    for i in (1, 4, 5):
        tau = st34_tau(i, eta=1)
        d = ds
        if i == 4:
            rw = Ring(ds.ring.vars, QW)
            d = ds.substitute({v: rw.gen(v) for v in ds.ring.vars}, ring=rw)
        assert d.evaluate({n: getattr(tau, n) for n in d.ring.vars}) == 0
    for i in (2, 3, 6):
        assert st34_tau(i, eta=1).t7 == 0
    rng = random.Random(17)
    found = 0
    while found < 10:
        vals = [mpq(0)] + [mpq(rng.randint(-6, 6), rng.randint(1, 3))
                           for _ in range(5)] + [mpq(0)]
        tau = FamilyParams(*vals)
        if ds.evaluate({n: getattr(tau, n) for n in ds.ring.vars}) == 0:
            continue
        found += 1
        reports, complete = classify_surface(f_family(tau))
        assert complete and len(reports) == 1
        assert str(reports[0].type) == "A1"
        assert reports[0].point == (mpq(0), mpq(0), mpq(0))
    print("criterion 8 (vanishing consistency): PASS")


def test_criterion_9_oracle_suite():
    ring = Ring(("x", "y"))
    gens = [parse_poly("3*x^2*y", ring), parse_poly("x^3 + 3*y^2", ring)]
    assert quotient_dimension(buchberger(gens)) == 7
    # the independent brute-force count lives in test_groebner and gives 7 too;
    # here check local-vs-global additivity on every multi-point fixture
    fixtures = [f_curve(lambda_case(i, eta=1)) for i in (3, 4, 5, 6)]
    fixtures += [f_family(st34_tau(i, eta=1)) for i in (1, 2, 5)]
    from e7st34.singclass import suspension_split
    for f in fixtures:
        g2, _, _ = suspension_split(f)
        reports, complete = classify_surface(f)
        assert complete and len(reports) >= 2
        ideal = [g2, g2.derivative("x"), g2.derivative("y")]
        total = quotient_dimension(buchberger(ideal))
        assert total == sum(r.milnor for r in reports)
    print("criterion 9 (oracle suite): PASS")
