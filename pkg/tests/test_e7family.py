"""Root-system data, spectral polynomials and the tabulated parameter maps."""

import random

from gmpy2 import mpq

from e7st34 import QW
from e7st34.e7family import (LambdaParams, case_eta, case_scaling, case_vector,
                             epsilons, f_curve, family_solutions, lambda_case,
                             pq_from_eps, pq_to_st, power_sums, psi_poly,
                             root_system, shioda_phi, st34_t_from_m, st34_tau,
                             st34_x_vector, st_to_pq, weight_set_56)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def test_root_count_and_norms():
    rs = root_system()
    assert len(rs.roots) == 126
    assert len(set(rs.roots)) == 126
    for r in rs.roots:
        assert _dot(r, r) == 2
        assert r[6] + r[7] == 0


def test_simple_roots_and_weights():
    rs = root_system()
    for a in rs.simple_roots:
        assert a in rs.roots
    for k, a in enumerate(rs.simple_roots):
        for j, w in enumerate(rs.fundamental_weights):
            assert _dot(a, w) == (1 if j == k else 0)


def test_roots_closed_under_simple_reflections():
    rs = root_system()
    roots = set(rs.roots)
    for a in rs.simple_roots:
        for r in rs.roots:
            assert rs.reflect(a, r) in roots


def test_weight_set():
    ws = weight_set_56()
    assert len(ws) == 56 and len(set(ws)) == 56
    rs = root_system()
    wset = set(ws)
    for a in rs.simple_roots:
        for v in ws:
            assert rs.reflect(a, v) in wset


def test_psi_reflection_invariance():
    rng = random.Random(10)
    rs = root_system()
    for _ in range(20):
        v = [mpq(rng.randint(-4, 4)) for _ in range(6)]
        t = mpq(rng.randint(-4, 4))
        vec = tuple(v) + (t, -t)
        root = rs.roots[rng.randrange(len(rs.roots))]
        assert psi_poly(vec) == psi_poly(rs.reflect(root, vec))


def _expected_psi(factors):
    """Product of (X^2 - a)^e factors given as (a, e) pairs, times X^e0."""
    ring = psi_poly((0,) * 8).ring
    x = ring.gen("X")
    out = ring.one()
    for a, e in factors:
        out = out * (x * x - a) ** e
    return out


PSI_CASES = {
    1: [(0, 16), (4, 12)],
    2: [(36, 7), (4, 21)],
    3: [(0, 10), (64, 6), (16, 12)],
    4: [(0, 6), (36, 4), (16, 6), (4, 12)],
    5: [(25, 3), (9, 10), (1, 15)],
    6: [(0, 10), (16, 2), (4, 16)],
    7: [(9, 1), (1, 27)],
}


def test_case_vectors_are_scaled_weights():
    rs = root_system()
    for i in range(1, 8):
        v, _eta, scale = case_scaling(i)
        vec = tuple(p.evaluate({"xi": mpq(1)}) for p in v)
        w = rs.fundamental_weights[i - 1]
        assert vec == tuple(scale * c for c in w)
        assert scale != 0


def test_psi_factorizations():
    for i, factors in PSI_CASES.items():
        assert psi_poly(case_vector(i, 1)) == _expected_psi(factors)


def test_first_epsilon_case7():
    eps = epsilons(case_vector(7, 1))
    assert eps[0] == 36


def test_eps_determines_lambda():
    for i in range(1, 8):
        lam = pq_from_eps(epsilons(case_vector(i, 1)))
        assert lam == lambda_case(i, eta=case_eta(i, 1))


def test_st_to_pq_roundtrip_symbolic():
    for i in range(1, 8):
        lam = lambda_case(i)
        for sol in family_solutions(i):
            got = st_to_pq(sol)
            assert got == lam, f"case {i}"


def test_pq_to_st_recovers_table():
    expected_counts = {1: 2, 2: 1, 3: 3, 4: 3, 5: 3, 6: 2, 7: 2}
    for i in range(1, 8):
        lam = lambda_case(i, eta=1)
        eliminant, sols = pq_to_st(lam)
        assert eliminant.degree_in("t2") == 9
        table = family_solutions(i, eta=1)
        assert len(sols) == expected_counts[i]
        for row in table:
            assert row in sols


def test_pq_to_st_zero_includes_origin():
    zero = LambdaParams(*(mpq(0) for _ in range(7)))
    _eliminant, sols = pq_to_st(zero)
    origin = tuple(mpq(0) for _ in range(7))
    assert any(tuple(s) == origin for s in sols)


def test_shioda_phi_matches_psi():
    for i in range(1, 8):
        lam = lambda_case(i, eta=case_eta(i, 1))
        assert shioda_phi(lam) == psi_poly(case_vector(i, 1))


def test_shioda_phi_subleading_coefficient():
    rng = random.Random(11)
    for i in (1, 4, 6):
        lam = lambda_case(i, eta=case_eta(i, 1))
        phi = shioda_phi(lam)
        coeffs = phi.as_univariate("X")
        assert coeffs[54].constant_coeff() == -36 * lam.q4
    del rng


def test_power_sums_checkpoints():
    # case 1: x = (0, 0, m, m, m, -3m)
    xs, eta = st34_x_vector(1)
    p3, p6, p9, p12, p15, q6 = power_sums(xs)
    ring = p3.ring
    m = ring.gen("m")
    assert p3 == -24 * m ** 3
    assert p6 == 732 * m ** 6
    assert p9 == -19680 * m ** 9
    assert p12 == 531444 * m ** 12
    assert p15 == -14348904 * m ** 15
    assert q6.is_zero()
    assert eta == 36 * m ** 6
    # case 2: x = (0, 0, 0, m, m, -2m)
    xs, eta = st34_x_vector(2)
    p3, p6, p9, p12, p15, q6 = power_sums(xs)
    ring = p3.ring
    m = ring.gen("m")
    assert (p3, p6, p9, p12, p15) == (-6 * m ** 3, 66 * m ** 6, -510 * m ** 9,
                                      4098 * m ** 12, -32766 * m ** 15)
    assert q6.is_zero()


def test_power_sums_case4_over_qw():
    xs, _eta = st34_x_vector(4)
    p3, p6, _p9, _p12, _p15, q6 = power_sums(xs)
    m = p3.ring.gen("m")
    w = QW.gen
    assert p3 == m ** 3 * (QW(-48) + w * -36)
    assert p6 == m ** 6 * (QW(1518) + w * 2520)
    assert q6 == m ** 6 * (w * -4) + m ** 6 * (-(w * w))


def test_t_from_m_spot_values():
    t = st34_t_from_m((mpq(1), mpq(0), mpq(0), mpq(0), mpq(0), mpq(0)))
    assert t.t1 == mpq(-1, 3)
    assert t.t2 == mpq(-261, 375)
    t = st34_t_from_m((mpq(0), mpq(1), mpq(0), mpq(0), mpq(0), mpq(0)))
    assert t.t2 == mpq(136, 375)


def test_t_from_m_grading():
    rng = random.Random(12)
    for _ in range(5):
        m = [mpq(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(6)]
        lam = mpq(rng.randint(1, 4), rng.randint(1, 3))
        scaled = [m[j] * lam ** (6 * (j + 1)) for j in range(5)] + [m[5] * lam ** 42]
        t0 = st34_t_from_m(m)
        t1 = st34_t_from_m(scaled)
        degrees = {"t1": 6, "t2": 12, "t3": 18, "t4": 24, "t5": 30, "t7": 42}
        for name, d in degrees.items():
            assert getattr(t1, name) == getattr(t0, name) * lam ** d


def test_tau_t7_pattern():
    for i in (2, 3, 6):
        assert st34_tau(i, eta=1).t7 == 0
    for i in (1, 4, 5):
        tau = st34_tau(i, eta=1)
        assert tau.t7 != 0
        assert tau.s3 == 0


def test_curve_polynomial_shape():
    lam = lambda_case(1, eta=1)
    f = f_curve(lam)
    assert f.degree_in("z") == 2
    assert f.degree_in("y") == 3
