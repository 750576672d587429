"""Elimination pipeline for the discriminant of the seven-parameter family.

Starting from the ansatz multipliers with undetermined coefficients a1..a7,
b1..b9, c1..c13, eliminate the c's (triangular), then the b's (Cramer), read
off the 7x7 matrix A over Q[s3, t1..t5, t7] and extract the monic-in-t7
discriminant delta_tilde together with its s3 = 0 companion delta_st34.
"""

from dataclasses import dataclass
from functools import lru_cache
import random

from gmpy2 import mpq

from .linalg import PolyMatrix, bareiss_det_rows, laplace_det_rows, solve_linear
from .poly import MPoly, Ring, parse_poly

_A_VARS = tuple(f"a{i}" for i in range(1, 8))
_B_VARS = tuple(f"b{j}" for j in range(1, 10))
_C_VARS = tuple(f"c{k}" for k in range(1, 14))
PARAM_VARS = ("s3", "t1", "t2", "t3", "t4", "t5", "t7")
# doubled integer weights: wt(x, y) = (4, 6), wt(s3) = 6, wt(t_j) = 2j
PARAM_WEIGHTS = (6, 2, 4, 6, 8, 10, 14)

_RH = Ring(("x", "y") + _A_VARS + _B_VARS + _C_VARS + PARAM_VARS)
_RS = Ring(PARAM_VARS)


def param_ring():
    return _RS


def _x_poly(coeff_names, lowest_power=0):
    x = _RH.gen("x")
    out = _RH.zero()
    for k, name in enumerate(coeff_names):
        out = out + _RH.gen(name) * x ** (k + lowest_power)
    return out


def _family_data():
    x = _RH.gen("x")
    s3, t1, t2, t3, t4, t5, t7 = (_RH.gen(v) for v in PARAM_VARS)
    a0 = t7 * x + t5 * x ** 2 + t3 * x ** 3 + t1 * x ** 4
    a1 = t4 * x + t2 * x ** 2 + x ** 3
    a2 = s3
    return a0, a1, a2


def build_H():
    """The multiplier combination g1*g + g2*dx(g) + g3*dy(g), z eliminated.

    g = A0 + A1 y + A2 y^2 + y^3 is the suspension-free part of the family
    member; H is linear in each of the coefficient groups a, b, c.
    """
    y = _RH.gen("y")
    a0, a1, a2 = _family_data()
    g = a0 + a1 * y + a2 * y ** 2 + y ** 3
    m0 = _x_poly(("a1", "a2", "a3", "a4", "a5"))
    m1 = _x_poly(("a6", "a7"))
    n0 = _x_poly(("b1", "b2"), lowest_power=1)
    n1 = _x_poly(("b3", "b4", "b5", "b6"))
    n2 = _x_poly(("b7", "b8", "b9"))
    p0 = _x_poly(("c1", "c2", "c3", "c4", "c5", "c6"))
    p1 = _x_poly(("c7", "c8", "c9", "c10", "c11"))
    p2 = _x_poly(("c12", "c13"))
    g1 = m0 + m1 * y
    g2 = n0 + n1 * y + n2 * y ** 2
    g3 = p0 + p1 * y + p2 * y ** 2
    h = g1 * g + g2 * g.derivative("x") + g3 * g.derivative("y")
    assert "z" not in h.vars_used()
    return h


def _substitute_linear(poly, values):
    """Substitute var -> value for variables poly is linear in (value var-free)."""
    for var, value in values.items():
        const = poly.coeff_in(var, 0)
        lin = poly.coeff_in(var, 1)
        if poly.degree_in(var) > 1:
            raise AssertionError(f"not linear in {var}")
        poly = const + lin * value
    return poly


def _solve_triangular(target, unknowns):
    """Solve target = 0 for unknowns, where the coefficient of x^k is
    3*unknowns[k] + (terms free of all unknowns)."""
    base = _substitute_linear(target, {u: _RH.zero() for u in unknowns})
    values = {}
    for k, u in enumerate(unknowns):
        values[u] = base.coeff_in("x", k) * mpq(-1, 3)
    residue = _substitute_linear(target, values)
    assert residue.is_zero(), "triangular c-solve left a residue"
    return values


@lru_cache(maxsize=1)
def eliminate_c_then_b():
    """(L0, L1): the degree-4 / degree-2 reductions of H, linear in a1..a7."""
    h = build_H()
    # stage 1: kill the y^4, y^3, y^2 coefficients by choosing the c's
    c_values = {}
    for power, unknowns in ((4, ("c12", "c13")),
                            (3, ("c7", "c8", "c9", "c10", "c11")),
                            (2, ("c1", "c2", "c3", "c4", "c5", "c6"))):
        target = _substitute_linear(h.coeff_in("y", power), c_values)
        c_values.update(_solve_triangular(target, unknowns))
    h = _substitute_linear(h, c_values)
    assert h.degree_in("y") <= 1
    k0_poly = h.coeff_in("y", 0)
    k1_poly = h.coeff_in("y", 1)
    assert k0_poly.degree_in("x") == 8 and k1_poly.degree_in("x") == 7
    assert k0_poly.coeff_in("x", 0).is_zero()  # H(0,0) = K0(0) = 0

    # stage 2: the nine named coefficient conditions eliminate b1..b9
    equations = [k0_poly.coeff_in("x", m) for m in range(5, 9)]
    equations += [k1_poly.coeff_in("x", m) for m in range(3, 8)]
    rows = []
    rhs = []
    for eq in equations:
        row = []
        for b in _B_VARS:
            coeff = eq.coeff_in(b, 1)
            assert not (coeff.vars_used() & set(_A_VARS + _B_VARS))
            row.append(coeff)
        rows.append(row)
        rhs.append(-_substitute_linear(eq, {b: _RH.zero() for b in _B_VARS}))
    numerators, det = solve_linear(rows, rhs)
    if det.is_zero():
        raise AssertionError("b-system is singular")

    def reduce_poly(p):
        # p + sum_j b_j * p_j with b_j = numerators[j]/det; coefficients of the
        # result must be polynomials (divide the cleared numerator by det)
        base = _substitute_linear(p, {b: _RH.zero() for b in _B_VARS})
        num = base * det
        for b, nb in zip(_B_VARS, numerators):
            num = num + p.coeff_in(b, 1) * nb
        return num.exact_divide(det)

    l0 = reduce_poly(k0_poly)
    l1 = reduce_poly(k1_poly)
    assert l0.degree_in("x") <= 4 and l1.degree_in("x") <= 2
    assert l0.coeff_in("x", 0).is_zero()
    assert not (l0.vars_used() | l1.vars_used()) & set(_B_VARS + _C_VARS)
    return l0, l1


def _project_params(p):
    """Map a poly in the big ring using only the parameters into the 7-var ring."""
    assert not (p.vars_used() - set(PARAM_VARS))
    return p.substitute({v: _RS.gen(v) if v in PARAM_VARS else _RS.zero()
                         for v in _RH.vars}, ring=_RS)


@lru_cache(maxsize=1)
def matrix_A():
    """The 7x7 coefficient matrix of H against (x, x^2, x^3, x^4, y, xy, x^2 y)."""
    l0, l1 = eliminate_c_then_b()
    entries = []
    for a in _A_VARS:
        row0 = l0.coeff_in(a, 1)
        row1 = l1.coeff_in(a, 1)
        row = [_project_params(row0.coeff_in("x", j)) for j in range(1, 5)]
        row += [_project_params(row1.coeff_in("x", k)) for k in range(3)]
        entries.append(row)
    # nothing outside the spanned monomial shape may survive
    zeroed = _substitute_linear(l0 + l1, {a: _RH.zero() for a in _A_VARS})
    assert zeroed.is_zero(), "H has a part not linear in the a's"
    return PolyMatrix(entries)


@dataclass(frozen=True)
class DiscriminantBundle:
    matrix: PolyMatrix
    k0: mpq
    delta_tilde: MPoly
    delta_st34: MPoly


@lru_cache(maxsize=1)
def bundle():
    """Matrix A, the normalizing scalar k0, delta_tilde and delta_st34."""
    a = matrix_A()
    det = laplace_det_rows(a.entries)
    t7 = _RS.gen("t7")
    quotient = det.exact_divide(t7)
    lead = quotient.coeff_in("t7", 7)
    assert lead.is_constant() and not lead.is_zero()
    k0 = lead.constant_coeff()
    delta = quotient / k0
    assert delta.coeff_in("t7", 7) == _RS.one()
    assert delta.weighted_degree(PARAM_WEIGHTS) == 98  # doubled weight of 49
    at_s3_zero = delta.substitute({"s3": _RS.zero()})
    st34 = at_s3_zero.exact_divide(t7)
    assert st34.coeff_in("t7", 6) == _RS.one()
    assert st34.weighted_degree(PARAM_WEIGHTS) == 84  # doubled weight of 42
    return DiscriminantBundle(a, k0, delta, st34)


def delta_tilde():
    return bundle().delta_tilde


def delta_st34():
    return bundle().delta_st34


def delta_tilde_0():
    """delta_tilde restricted to t1 = t2 = t3 = t4 = 0 (keeps s3, t5, t7)."""
    z = _RS.zero()
    return delta_tilde().substitute({"t1": z, "t2": z, "t3": z, "t4": z})


# -- cross-checks against the displayed specializations -------------------

_MATRIX_B_TEXT = [
    ["t7", "5/7*t5", "-1/7*s3", "0", "-2/7*s3^2", "0", "0"],
    ["0", "t7", "5/7*t5", "-1/7*s3", "0", "-2/7*s3^2", "0"],
    ["0", "0", "t7", "5/7*t5", "-1/7*s3*t7", "-2/7*s3*t5", "0"],
    ["0", "0", "0", "t5", "5/7*t5*t7", "10/7*t5^2 - 1/7*s3*t7", "-12/7*s3*t5"],
    ["4/7*s3*t5*t7", "8/7*s3*t5^2", "0", "0", "t7^2", "19/7*t5*t7",
     "10/7*t5^2 - 15/7*s3*t7"],
    ["1/21*s3*t7", "2/21*s3*t5", "2/21*s3^2", "0", "4/21*s3^3", "t7", "5/7*t5"],
    ["-5/21*t5*t7", "-10/21*t5^2 + 1/21*s3*t7", "2/21*s3*t5", "2/21*s3^2", "0",
     "4/21*s3^3", "t7"],
]


def matrix_B_published():
    """The displayed specialization of A at t1 = .. = t4 = 0, incl. 7/9 factor."""
    return PolyMatrix([[parse_poly(t, _RS) * mpq(7, 9) for t in row]
                       for row in _MATRIX_B_TEXT])


def matrix_B_computed():
    z = _RS.zero()
    sub = {"t1": z, "t2": z, "t3": z, "t4": z}
    return matrix_A().map(lambda p: p.substitute(sub))


def compare_matrix_B():
    """Entrywise comparison; returns the list of disagreeing positions."""
    comp = matrix_B_computed()
    pub = matrix_B_published()
    return [(i + 1, j + 1) for i in range(7) for j in range(7)
            if comp[i, j] != pub[i, j]]


_UV_TEXT = {
    "M1": "252105*t5*t7^5 + 11025*s3^4*t7^4 - 172053*s3^3*t5^2*t7^3"
          " - 27000*s3^7*t5*t7^2 + 9025*s3^2*t5^4*t7^2 + 9504*s3^6*t5^3*t7"
          " - 7200*s3^5*t5^5",
    "N1": "-50421*s3*t7^5 - 180075*t5^2*t7^4 + 11340*s3^4*t5*t7^3"
          " + 129555*s3^3*t5^3*t7^2 + 21600*s3^7*t5^2*t7 + 6250*s3^2*t5^5*t7"
          " - 8640*s3^6*t5^4",
    "M2": "-8823675*t5^2*t7^6 - 1065015*s3^4*t5*t7^5 - 253125*s3^8*t7^4"
          " + 6399645*s3^3*t5^3*t7^4 + 1139400*s3^7*t5^2*t7^3"
          " - 520625*s3^2*t5^5*t7^3 - 449928*s3^6*t5^4*t7^2"
          " - 253125*s3*t5^7*t7^2 + 540000*s3^5*t5^6*t7 + 82944*s3^9*t5^5"
          " + 150000*s3^4*t5^8",
    "N2": "1555848*s3^3*t5*t7^5 + 354375*s3^7*t7^4 - 874650*s3^2*t5^3*t7^4"
          " - 325080*s3^6*t5^2*t7^3 - 10106250*s3*t5^5*t7^3"
          " + 219240*s3^5*t5^4*t7^2 - 2953125*t5^7*t7^2 + 6300000*s3^4*t5^6*t7"
          " + 967680*s3^8*t5^5 + 1750000*s3^3*t5^8",
}

_RS0 = Ring(("s3", "t5", "t7"))


def uv_point_polys():
    """The numerators/denominators (M1, N1, M2, N2) of the section (u, v)."""
    return {k: parse_poly(t, _RS0) for k, t in _UV_TEXT.items()}


def _reduce_monic_t7(p, modulus):
    """Remainder of p modulo a polynomial monic in t7 (here of degree 7)."""
    d = modulus.degree_in("t7")
    t7 = p.ring.gen("t7")
    while p.degree_in("t7") >= d:
        k = p.degree_in("t7")
        lead = p.coeff_in("t7", k)
        p = p - lead * t7 ** (k - d) * modulus
    return p


def verify_uv_points():
    """Check the four congruences f0 = dx f0 = dy f0 = dz f0 = 0 at (u, v, 0).

    Returns a dict name -> bool, each congruence taken modulo the restricted
    discriminant after clearing the denominators N1, N2.
    """
    uv = uv_point_polys()
    m1, n1, m2, n2 = uv["M1"], uv["N1"], uv["M2"], uv["N2"]
    d0 = delta_tilde_0().substitute(
        {v: _RS0.gen(v) if v in _RS0.index else _RS0.zero() for v in _RS.vars},
        ring=_RS0)
    s3, t5, t7 = (_RS0.gen(v) for v in ("s3", "t5", "t7"))
    # f0 = x^3 y + y^3 + s3 y^2 + t7 x + t5 x^2 at (x, y) = (M1/N1, M2/N2)
    cleared = {
        "f0": (m1 ** 3 * m2 * n2 ** 2 + m2 ** 3 * n1 ** 3
               + s3 * m2 ** 2 * n1 ** 3 * n2 + t7 * m1 * n1 ** 2 * n2 ** 3
               + t5 * m1 ** 2 * n1 * n2 ** 3),
        "dx_f0": (3 * m1 ** 2 * m2 + t7 * n1 ** 2 * n2 + 2 * t5 * m1 * n1 * n2),
        "dy_f0": (m1 ** 3 * n2 ** 2 + 3 * m2 ** 2 * n1 ** 3
                  + 2 * s3 * m2 * n1 ** 3 * n2),
        "dz_f0": _RS0.zero(),
    }
    return {k: _reduce_monic_t7(p, d0).is_zero() for k, p in cleared.items()}


def audit_det_points(n_points=20, seed=7):
    """Probabilistic re-check: det(A) = k0 * t7 * delta_tilde at random points."""
    b = bundle()
    rng = random.Random(seed)
    ok = 0
    for _ in range(n_points):
        point = {v: mpq(rng.randint(-9, 9), rng.randint(1, 5)) for v in PARAM_VARS}
        rows = [[b.matrix[i, j].evaluate(point) for j in range(7)] for i in range(7)]
        det = bareiss_det_rows([[_q_as_poly(c) for c in r] for r in rows])
        lhs = det.constant_coeff() if isinstance(det, MPoly) else det
        rhs = b.k0 * point["t7"] * b.delta_tilde.evaluate(point)
        if lhs == rhs:
            ok += 1
    return ok


_RQ = Ring(())


def _q_as_poly(c):
    return _RQ.const(c)


def emit(path, which="delta_tilde"):
    """Write delta_tilde or delta_st34 to disk in the polynomial text format."""
    poly = delta_tilde() if which == "delta_tilde" else delta_st34()
    text = str(poly) + "\n"
    with open(path, "w") as fh:
        fh.write(text)
    return text


def load(path):
    """Read a previously emitted discriminant back into the parameter ring."""
    with open(path) as fh:
        return parse_poly(fh.read(), _RS)
