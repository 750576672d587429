"""E7 root-system data, 56-weight spectral polynomials and parameter tables.

Vectors live in the hyperplane V of R^8 orthogonal to e7 + e8, with exact
rational coordinates.  The module also houses the deformation-parameter
tables for the seven one-parameter curves and the six reflection-group
checkpoints, loaded from data files in the polynomial text format.
"""

from functools import lru_cache
from importlib import resources
from itertools import combinations, product
from typing import NamedTuple

from gmpy2 import mpq

from .fields import QQ, QW, rational
from .poly import Ring, parse_poly, rational_roots


class LambdaParams(NamedTuple):
    """The seven coefficients (p0, p1, q0, q1, q2, q3, q4) of a plane curve."""

    p0: object
    p1: object
    q0: object
    q1: object
    q2: object
    q3: object
    q4: object


class FamilyParams(NamedTuple):
    """The seven family parameters (s3, t1, t2, t3, t4, t5, t7)."""

    s3: object
    t1: object
    t2: object
    t3: object
    t4: object
    t5: object
    t7: object


# -- root system ----------------------------------------------------------

def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _solve_rational(rows, rhs):
    """Gaussian elimination over mpq for a square nonsingular system."""
    n = len(rows)
    a = [list(map(rational, row)) + [rational(rhs[i])] for i, row in enumerate(rows)]
    for k in range(n):
        piv = next(i for i in range(k, n) if a[i][k])
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [c * inv for c in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                c = a[i][k]
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


class RootSystemE7:
    """The 126 roots, seven simple roots and fundamental weights of type E7."""

    def __init__(self):
        self.roots = self._build_roots()
        self.simple_roots = self._build_simple_roots()
        self.fundamental_weights = self._build_fundamental_weights()

    @staticmethod
    def _build_roots():
        roots = []
        for i, j in combinations(range(6), 2):
            for si, sj in product((1, -1), repeat=2):
                v = [mpq(0)] * 8
                v[i], v[j] = mpq(si), mpq(sj)
                roots.append(tuple(v))
        for s in (1, -1):
            v = [mpq(0)] * 8
            v[6], v[7] = mpq(-s), mpq(s)
            roots.append(tuple(v))
        half = mpq(1, 2)
        for signs in product((1, -1), repeat=6):
            if sum(1 for s in signs if s < 0) % 2 == 1:
                v = [half * s for s in signs] + [-half, half]
                roots.append(tuple(v))
                roots.append(tuple(-c for c in v))
        return roots

    @staticmethod
    def _build_simple_roots():
        h = mpq(1, 2)
        a1 = (h, -h, -h, -h, -h, -h, -h, h)
        a2 = (mpq(1), mpq(1)) + (mpq(0),) * 6

        def diff(i, j):
            v = [mpq(0)] * 8
            v[i], v[j] = mpq(1), mpq(-1)
            return tuple(v)

        return [a1, a2, diff(1, 0), diff(2, 1), diff(3, 2), diff(4, 3), diff(5, 4)]

    def _build_fundamental_weights(self):
        # parametrize V by (c1..c6, c7) -> sum c_i e_i + c7 (e7 - e8)
        basis = []
        for i in range(6):
            b = [mpq(0)] * 8
            b[i] = mpq(1)
            basis.append(tuple(b))
        basis.append((mpq(0),) * 6 + (mpq(1), mpq(-1)))
        rows = [[_dot(a, b) for b in basis] for a in self.simple_roots]
        weights = []
        for j in range(7):
            rhs = [mpq(1) if k == j else mpq(0) for k in range(7)]
            coords = _solve_rational(rows, rhs)
            w = [mpq(0)] * 8
            for c, b in zip(coords, basis):
                for i in range(8):
                    w[i] += c * b[i]
            weights.append(tuple(w))
        return weights

    def reflect(self, root, v):
        """Reflection of v in the hyperplane orthogonal to the given root."""
        c = _dot(root, v)  # <root, root> = 2, so the coroot pairing is <root, v>
        return tuple(x - c * r for x, r in zip(v, root))


@lru_cache(maxsize=1)
def root_system():
    return RootSystemE7()


def _weight_vectors_28():
    """The 28 weight vectors whose +/- orbit has 56 elements."""
    lams = []
    for j in range(6):
        v = [mpq(0)] * 8
        v[j] = mpq(2)
        v[6], v[7] = mpq(-1), mpq(1)
        lams.append(tuple(v))
    lams.append((mpq(1),) * 6 + (mpq(0), mpq(0)))
    third = mpq(1, 3)
    total = tuple(sum(l[i] for l in lams) for i in range(8))
    pairs = []
    for j, k in combinations(range(7), 2):
        pairs.append(tuple(lams[j][i] + lams[k][i] - third * total[i] for i in range(8)))
    return lams + pairs


@lru_cache(maxsize=1)
def weight_set_56():
    """All 56 weight vectors (the 28 and their negatives)."""
    half = _weight_vectors_28()
    return half + [tuple(-c for c in v) for v in half]


_RX = Ring(("X",))


def psi_poly(v):
    """The monic even degree-56 spectral polynomial of a vector in V."""
    v = tuple(rational(c) for c in v)
    if len(v) != 8 or v[6] + v[7] != 0:
        raise ValueError("vector must lie in V (orthogonal to e7 + e8)")
    x = _RX.gen("X")
    out = _RX.one()
    for lam in _weight_vectors_28():
        u = _dot(lam, v)
        out = out * (x * x - u * u)
    return out


def epsilons(v):
    """The 28 signed elementary symmetric functions of the squared pairings."""
    psi = psi_poly(v)
    coeffs = psi.as_univariate("X")
    out = []
    for nu in range(1, 29):
        c = coeffs[56 - 2 * nu].constant_coeff()
        out.append(-c if nu % 2 else c)
    return tuple(out)


# -- parameter maps -------------------------------------------------------

_RE = Ring(("e1", "e3", "e4", "e5", "e6", "e7", "e9"))

# (prefactor, integer-coefficient numerator); the q-row prefactors carry an
# extra sign so that the map composed with epsilons() lands on the tabulated
# curves (checked against every case below).
_PQ_EPS = {
    "p0": (mpq(1, 304749527040),
           "-318565*e1^6 + 6959520*e1^3*e3 + 58786560*e3^2 - 99283968*e1^2*e4"
           " + 321739776*e1*e5 - 564350976*e6"),
    "p1": (mpq(1, 11197440), "12025*e1^4 - 129600*e1*e3 + 186624*e4"),
    "q0": (mpq(-1, 1922184675880442265600),
           "39246404257775*e1^9 - 876440477901600*e1^6*e3"
           " + 4631876791257600*e1^3*e3^2 + 1852115250585600*e3^3"
           " + 1750210811020800*e1^5*e4 - 18355359088558080*e1^2*e3*e4"
           " + 11416404882161664*e1*e4^2 - 1692182935434240*e1^4*e5"
           " + 18973439502336000*e1*e3*e5 - 10826792911503360*e4*e5"
           " - 336175411138560*e1^3*e6 - 14682832212787200*e3*e6"
           " + 6427167525273600*e1^2*e7 - 65167638862233600*e9"),
    "q1": (mpq(-1, 6999487137054720),
           "-4309074055*e1^7 + 79908139440*e1^4*e3 - 356716846080*e1*e3^2"
           " - 73460991744*e1^3*e4 + 462203449344*e3*e4 + 143740790784*e1^2*e5"
           " - 747200692224*e1*e6 + 1828497162240*e7"),
    "q2": (mpq(-1, 470292480),
           "3575*e1^5 - 86400*e1^2*e3 + 435456*e1*e4 - 933120*e5"),
    "q3": (mpq(-1, 93312), "-169*e1^3 + 1296*e3"),
    "q4": (mpq(1, 36), "e1"),
}


@lru_cache(maxsize=1)
def _pq_eps_polys():
    return {k: (pref, parse_poly(text, _RE)) for k, (pref, text) in _PQ_EPS.items()}


def pq_from_eps(eps):
    """Curve coefficients from the symmetric functions (eps[0] is the first)."""
    point = {f"e{nu}": rational(eps[nu - 1]) for nu in (1, 3, 4, 5, 6, 7, 9)}
    polys = _pq_eps_polys()
    vals = {k: pref * poly.evaluate(point) for k, (pref, poly) in polys.items()}
    return LambdaParams(vals["p0"], vals["p1"], vals["q0"], vals["q1"],
                        vals["q2"], vals["q3"], vals["q4"])


def st_to_pq(params):
    """Curve coefficients from family parameters; exact, symbolic or values."""
    s3, t1, t2, t3, t4, t5, t7 = params
    p0 = (-9 * s3 ** 2 + 2 * t2 ** 3 - 9 * t2 * t4) / 27
    p1 = (-t2 ** 2 + 3 * t4) / 3
    q0 = (6 * s3 ** 3 - 2 * s3 * t2 ** 3 + t1 * t2 ** 4 - 3 * t2 ** 3 * t3
          + 9 * s3 * t2 * t4 + 9 * t2 ** 2 * t5 - 27 * t2 * t7) / 81
    q1 = (3 * s3 * t2 ** 2 - 4 * t1 * t2 ** 3 + 9 * t2 ** 2 * t3 - 9 * s3 * t4
          - 18 * t2 * t5 + 27 * t7) / 27
    q2 = (2 * t1 * t2 ** 2 - 3 * t2 * t3 + 3 * t5) / 3
    q3 = (-s3 - 4 * t1 * t2 + 3 * t3) / 3
    q4 = t1
    return LambdaParams(p0, p1, q0, q1, q2, q3, q4)


_RT2 = Ring(("t2",))


def pq_to_st(lam):
    """Family parameters matching rational curve coefficients.

    Returns (eliminant in t2, list of rational solutions); every returned
    solution satisfies st_to_pq(solution) == lam exactly.
    """
    lam = LambdaParams(*(rational(c) for c in lam))
    t2 = _RT2.gen("t2")
    m_poly = 27 * lam.p0 + 9 * lam.p1 * t2 + t2 ** 3
    n_poly = (81 * lam.q0 + 27 * lam.q1 * t2 + 9 * lam.q2 * t2 ** 2
              + 3 * lam.q3 * t2 ** 3 + lam.q4 * t2 ** 4)
    elim = 4 * m_poly ** 3 + 81 * n_poly ** 2
    elim = elim / elim.content()
    solutions = []
    for t20, _mult in rational_roots(elim, "t2"):
        m0 = m_poly.evaluate({"t2": t20})
        n0 = n_poly.evaluate({"t2": t20})
        s3 = -3 * n0 / (2 * m0) if m0 else mpq(0)
        t1 = lam.q4
        t4 = (3 * lam.p1 + t20 ** 2) / 3
        t3 = (3 * lam.q3 + s3 + 4 * lam.q4 * t20) / 3
        t5 = (3 * lam.q2 + 3 * lam.q3 * t20 + s3 * t20 + 2 * lam.q4 * t20 ** 2) / 3
        t7 = (27 * lam.q1 + 9 * lam.p1 * s3 + 18 * lam.q2 * t20 + 9 * lam.q3 * t20 ** 2
              + 3 * s3 * t20 ** 2 + 4 * lam.q4 * t20 ** 3) / 27
        cand = FamilyParams(s3, t1, t20, t3, t4, t5, t7)
        if st_to_pq(cand) == lam:
            solutions.append(cand)
    solutions.sort()
    return elim, solutions


# -- defining polynomials -------------------------------------------------

def curve_ring(field=QQ):
    return Ring(("x", "y", "z"), field)


def f_curve(lam, ring=None):
    """The surface -z^2 + y^3 + y(p0 + p1 x + x^3) + q0 + ... + q4 x^4."""
    r = ring if ring is not None else curve_ring()
    x, y, z = r.gen("x"), r.gen("y"), r.gen("z")
    p0, p1, q0, q1, q2, q3, q4 = (r.const(c) for c in lam)
    return (-z ** 2 + y ** 3 + y * (p0 + p1 * x + x ** 3)
            + q0 + q1 * x + q2 * x ** 2 + q3 * x ** 3 + q4 * x ** 4)


def f_family(params, ring=None):
    """The family member y^3 + s3 y^2 + (t4 x + t2 x^2 + x^3) y + A0(x) - z^2."""
    r = ring if ring is not None else curve_ring()
    x, y, z = r.gen("x"), r.gen("y"), r.gen("z")
    s3, t1, t2, t3, t4, t5, t7 = (r.const(c) for c in params)
    a0 = t7 * x + t5 * x ** 2 + t3 * x ** 3 + t1 * x ** 4
    a1 = t4 * x + t2 * x ** 2 + x ** 3
    return y ** 3 + s3 * y ** 2 + a1 * y + a0 - z ** 2


# -- elimination of the 56 branch points ----------------------------------

_RCD = Ring(("c", "d"))


def shioda_phi(lam):
    """The monic degree-56 even polynomial tracking the 56 branch values.

    Works at rational specializations: eliminate the auxiliary system for
    (a, b, d, e) down to a single polynomial in c, strip content and the
    cleared powers of c, and return the monic degree-56 remainder.
    """
    from .poly import resultant

    lam = LambdaParams(*(rational(v) for v in lam))
    c, d = _RCD.gen("c"), _RCD.gen("d")
    a = c ** 2 - lam.q4
    b = 2 * c * d - a ** 3 - lam.q3
    e_num = 3 * a ** 2 * b + lam.p1 * a + lam.q2 - d ** 2  # 2 c e
    r1 = d * e_num - c * (3 * a * b ** 2 + lam.p0 * a + lam.p1 * b + lam.q1)
    r2 = e_num ** 2 - 4 * c ** 2 * (b ** 3 + lam.p0 * b + lam.q0)
    if r1.degree_in("d") != 3 or r2.degree_in("d") != 4:
        raise ValueError("specialization degenerate, perturb lambda")
    res = resultant(r1, r2, "d")
    res = res / res.content()
    # the denominator-clearing introduces a pure power of c; the sought factor
    # has degree 56, so exactly deg - 56 powers of c are extraneous
    extra = res.degree_in("c") - 56
    lowest = min(exp[_RCD.index["c"]] for exp in res.terms)
    if extra < 0 or extra > lowest:
        raise ValueError("elimination did not produce a degree-56 factor")
    if extra:
        res = res.exact_divide(c ** extra)
    _, lead = res.leading()
    res = res / lead
    phi = res.substitute({"c": _RX.gen("X"), "d": _RX.zero()}, ring=_RX)
    if any(exp[0] % 2 for exp in phi.terms):
        raise ValueError("elimination result is not even")
    return phi


# -- tabulated data -------------------------------------------------------

_RETA = Ring(("eta",))
_RETA_W = Ring(("eta",), QW)
_RXI = Ring(("xi",))
_RM = Ring(("m",))
_RM_W = Ring(("m",), QW)


@lru_cache(maxsize=None)
def _load_table(filename, field_cases=()):
    """Parse a data file of case|name|poly lines; values keyed (case, name)."""
    text = resources.files("e7st34.data").joinpath(filename).read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("|")
        case = int(parts[0])
        key = (case, *parts[1:-1]) if len(parts) > 3 else (case, parts[1])
        ring = _ring_for(filename, case, field_cases)
        out[key] = parse_poly(parts[-1], ring)
    return out


def _ring_for(filename, case, field_cases):
    ext = case in field_cases
    if filename == "v_cases.txt":
        return _RXI
    if filename == "x_vectors.txt":
        return _RM_W if ext else _RM
    return _RETA_W if ext else _RETA


def _eval_or_keep(poly, var, value):
    if value is None:
        return poly
    return poly.evaluate({var: rational(value)})


def lambda_case(i, eta=None):
    """The tabulated curve coefficients of case i, at eta or symbolically."""
    if not 1 <= i <= 7:
        raise ValueError("case index must be 1..7")
    tab = _load_table("lambda_cases.txt")
    names = ("p0", "p1", "q0", "q1", "q2", "q3", "q4")
    return LambdaParams(*(_eval_or_keep(tab[i, n], "eta", eta) for n in names))


def case_scaling(i):
    """(v(xi) 8-tuple, eta(xi), weight multiple) for case i, symbolic in xi."""
    if not 1 <= i <= 7:
        raise ValueError("case index must be 1..7")
    tab = _load_table("v_cases.txt")
    v = tuple(tab[i, f"v{k}"] for k in range(1, 9))
    return v, tab[i, "eta"], tab[i, "scale"].constant_coeff()


def case_vector(i, xi=1):
    """The case-i weight-space vector evaluated at a rational xi."""
    v, _, _ = case_scaling(i)
    return tuple(p.evaluate({"xi": rational(xi)}) for p in v)


def case_eta(i, xi=1):
    """The case-i scale parameter eta evaluated at a rational xi."""
    _, eta, _ = case_scaling(i)
    return eta.evaluate({"xi": rational(xi)})


def family_solutions(i, eta=None):
    """The tabulated family-parameter solutions of case i (list of rows)."""
    if not 1 <= i <= 7:
        raise ValueError("case index must be 1..7")
    tab = _load_table("solutions_33.txt")
    names = ("s3", "t1", "t2", "t3", "t4", "t5", "t7")
    ks = sorted({key[1] for key in tab if key[0] == i})
    return [FamilyParams(*(_eval_or_keep(tab[i, k, n], "eta", eta) for n in names))
            for k in ks]


def st34_tau(i, eta=None):
    """The checkpoint parameters tau[i] with s3 = 0 (case 4 over Q(w))."""
    if not 1 <= i <= 6:
        raise ValueError("case index must be 1..6")
    tab = _load_table("tau_st34.txt", field_cases=(4,))
    names = ("t1", "t2", "t3", "t4", "t5", "t7")
    zero = _RETA_W.zero() if i == 4 else _RETA.zero()
    s3 = zero if eta is None else (QW.zero if i == 4 else mpq(0))
    return FamilyParams(s3, *(_eval_or_keep(tab[i, n], "eta", eta) for n in names))


def st34_x_vector(i, m=None):
    """The six-coordinate checkpoint vector x[i] and its eta(m)."""
    if not 1 <= i <= 6:
        raise ValueError("case index must be 1..6")
    tab = _load_table("x_vectors.txt", field_cases=(4,))
    xs = tuple(_eval_or_keep(tab[i, f"x{k}"], "m", m) for k in range(1, 7))
    eta = _eval_or_keep(tab[i, "eta"], "m", m)
    return xs, eta


def power_sums(x):
    """(p3, p6, p9, p12, p15, q6): cubic power sums and the product."""
    if len(x) != 6:
        raise ValueError("expected six coordinates")
    sums = []
    for j in range(1, 6):
        acc = None
        for c in x:
            t = c ** (3 * j)
            acc = t if acc is None else acc + t
        sums.append(acc)
    prod = None
    for c in x:
        prod = c if prod is None else prod * c
    return (*sums, prod)


def st34_t_from_m(m):
    """Family parameters from the six basic invariants (m1..m5, m7)."""
    if len(m) != 6:
        raise ValueError("expected (m1, m2, m3, m4, m5, m7)")
    m1, m2, m3, m4, m5, m7 = (rational(v) if isinstance(v, int) else v for v in m)
    t1 = -m1 / 3
    t2 = (-261 * m1 ** 2 + 136 * m2) / 375
    t3 = 2 * (4332933 * m1 ** 3 - 3218508 * m1 * m2 + 182200 * m3) / 35008875
    t4 = 32 * (13040967602916 * m1 ** 4 - 19382588618832 * m1 ** 2 * m2
               + 3749217437791 * m2 ** 2 + 2954928140625 * m1 * m3
               - 362524562500 * m4) / 3025275887390625
    t5 = -32 * (8914891074037771985316 * m1 ** 5
                - 15462298032201009500832 * m1 ** 3 * m2
                + 5103760684853498949891 * m1 * m2 ** 2
                + 2363633130501481337325 * m1 ** 2 * m3
                - 591120664646165159200 * m2 * m3
                - 359933922744912562500 * m1 * m4
                + 31067730199334950000 * m5) / 4487084376913286386734375
    t7 = 256 * (14871910397621845428216716224661671265424 * m1 ** 7
                - 22594055415192719865974501421984515475072 * m1 ** 5 * m2
                + 39247738767940784266429333042398888460122 * m1 ** 3 * m2 ** 2
                - 21532675581751266617292332369740068234849 * m1 * m2 ** 3
                - 18871924703475618698688320687560320957450 * m1 ** 4 * m3
                - 7532523232522082240537430915748704681975 * m1 ** 2 * m2 * m3
                + 5405897134435116004179853550160817358175 * m2 ** 2 * m3
                + 938153790719655723498182223303588515625 * m1 * m3 ** 2
                + 9505439156792034835091871022754851500000 * m1 ** 3 * m4
                + 3847577219357879613235041793857467250000 * m1 * m2 * m4
                - 580393753984805908080293175724529687500 * m3 * m4
                - 2081725637615256911464889266041895725000 * m1 ** 2 * m5
                - 679073398830294573402186747103227712500 * m2 * m5
                + 55655256504728944788956726765978125000 * m7
                ) / 2613546665875782334063922888546747071751953125
    zero = t1 - t1
    return FamilyParams(zero, t1, t2, t3, t4, t5, t7)
