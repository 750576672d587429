"""An algebraic Frobenius potential on seven variables and its det(T).

Elements of the algebra live in the quadratic extension z^2 = w = x6 - v of
the polynomial ring Q[x1..x7]; AlgElem stores (p + q z) / w^k.  The module
builds the potential F, the second-derivative matrix C, the structure
matrices B_j, the Euler-derived matrix T, and matches det(T) against the
family discriminant under the tabulated coordinate transformation.
"""

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .fields import QC7, rational
from .linalg import laplace_det_rows
from .poly import InexactDivision, MPoly, Ring, parse_poly

_XVARS = tuple(f"x{i}" for i in range(1, 8))
_RP = Ring(_XVARS)

_V_TEXT = ("-36*x1^6 - 36*x1^4*x2 + 12*x1^3*x3 - 231*x1^2*x2^2 - 6*x1^2*x4"
           " - 84*x1*x2*x3 - x1*x5 - 49*x2^3 - 7*x2*x4 - 7*x3^2")


@lru_cache(maxsize=1)
def v_poly():
    return parse_poly(_V_TEXT, _RP)


@lru_cache(maxsize=1)
def w_poly():
    return _RP.gen("x6") - v_poly()


class AlgElem:
    """(p + q*z) / w^k with z^2 = w; normalized so w divides neither part."""

    __slots__ = ("p", "q", "k")

    def __init__(self, p, q=None, k=0, normalize=True):
        self.p = p
        self.q = q if q is not None else _RP.zero()
        self.k = k
        if normalize:
            self._normalize()

    def _normalize(self):
        if self.p.is_zero() and self.q.is_zero():
            self.k = 0
            return
        w = w_poly()
        while self.k > 0:
            try:
                p2 = self.p.exact_divide(w) if not self.p.is_zero() else self.p
                q2 = self.q.exact_divide(w) if not self.q.is_zero() else self.q
            except InexactDivision:
                break
            self.p, self.q, self.k = p2, q2, self.k - 1

    @staticmethod
    def const(c):
        return AlgElem(_RP.const(c), normalize=False)

    @staticmethod
    def var(name):
        return AlgElem(_RP.gen(name), normalize=False)

    @staticmethod
    def z():
        return AlgElem(_RP.zero(), _RP.one(), normalize=False)

    def is_zero(self):
        return self.p.is_zero() and self.q.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            return other
        if isinstance(other, MPoly):
            return AlgElem(other, normalize=False)
        if isinstance(other, (int, mpq)):
            return AlgElem.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        w = w_poly()
        k = max(self.k, o.k)
        f1 = w ** (k - self.k)
        f2 = w ** (k - o.k)
        return AlgElem(self.p * f1 + o.p * f2, self.q * f1 + o.q * f2, k)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(-self.p, -self.q, self.k, normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, mpq)):
            return AlgElem(self.p * other, self.q * other, self.k, normalize=False)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        w = w_poly()
        p = self.p * o.p + self.q * o.q * w
        q = self.p * o.q + self.q * o.p
        return AlgElem(p, q, self.k + o.k)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.k == o.k

    def __hash__(self):
        return hash((self.p, self.q, self.k))

    def partial(self, j):
        """Derivative in x_j; z differentiates as dz = (d_j w) z / (2w)."""
        var = f"x{j}" if isinstance(j, int) else j
        w = w_poly()
        g = w.derivative(var)
        a = self.p.derivative(var)
        b = self.q.derivative(var)
        p = a * w - self.k * g * self.p
        q = b * w + g * self.q * mpq(1, 2) - self.k * g * self.q
        return AlgElem(p, q, self.k + 1)

    def euler(self):
        """The Euler derivative sum_j (j/7) x_j d_j."""
        acc = AlgElem(_RP.zero(), normalize=False)
        for j in range(1, 8):
            term = self.partial(j)
            acc = acc + AlgElem(_RP.gen(f"x{j}"), normalize=False) * term * mpq(j, 7)
        return acc

    def __repr__(self):
        return f"AlgElem(({self.p!r}) + ({self.q!r})*z, k={self.k})"


_F_TERMS = [
    # the quadratic pairing block
    "1/2*x1*x7^2", "1/2*x4^2*x7", "x3*x5*x7", "x2*x6*x7",
    # the polynomial bulk, in display order
    "3939238656/1092455*x1^15", "-10368/7*x2*x1^13", "3456/7*x3*x1^12",
    "18166464/539*x2^2*x1^11", "-1728/7*x4*x1^11", "-19008/7*x2*x3*x1^10",
    "-288/7*x5*x1^10", "216576/7*x2^3*x1^9", "643392/49*x3^2*x1^9",
    "-4608/7*x2*x4*x1^9", "-288/7*x6*x1^9", "-1728/7*x2^2*x3*x1^8",
    "864/7*x3*x4*x1^8", "-432/7*x2*x5*x1^8", "60264*x2^4*x1^7",
    "-115776/7*x2*x3^2*x1^7", "72360/343*x4^2*x1^7", "3024*x2^2*x4*x1^7",
    "144/7*x3*x5*x1^7", "-432/7*x2*x6*x1^7", "42528/7*x3^3*x1^6",
    "19152*x2^3*x3*x1^6", "36864/7*x2*x3*x4*x1^6", "576*x2^2*x5*x1^6",
    "-72/7*x4*x5*x1^6", "144/7*x3*x6*x1^6", "252252/5*x2^5*x1^5",
    "18216*x2^2*x3^2*x1^5", "2844/7*x2*x4^2*x1^5", "942/245*x5^2*x1^5",
    "4824*x2^3*x4*x1^5", "-10944/7*x3^2*x4*x1^5", "360*x2*x3*x5*x1^5",
    "576*x2^2*x6*x1^5", "-72/7*x4*x6*x1^5", "-7008*x2*x3^3*x1^4",
    "36/7*x3*x4^2*x1^4", "23940*x2^4*x3*x1^4", "1728*x2^2*x3*x4*x1^4",
    "420*x2^3*x5*x1^4", "1632/7*x3^2*x5*x1^4", "456/7*x2*x4*x5*x1^4",
    "360*x2*x3*x6*x1^4", "-12/7*x5*x6*x1^4", "38220*x2^6*x1^3",
    "3032*x3^4*x1^3", "-102/7*x4^3*x1^3", "4116*x2^3*x3^2*x1^3",
    "444*x2^2*x4^2*x1^3", "-27/7*x2*x5^2*x1^3", "54/49*x6^2*x1^3",
    "5082*x2^4*x4*x1^3", "264*x2*x3^2*x4*x1^3", "156*x2^2*x3*x5*x1^3",
    "-276/7*x3*x4*x5*x1^3", "420*x2^3*x6*x1^3", "48*x3^2*x6*x1^3",
    "24*x2*x4*x6*x1^3", "1988*x2^2*x3^3*x1^2", "-150*x2*x3*x4^2*x1^2",
    "25/7*x3*x5^2*x1^2", "24402*x2^5*x3*x1^2", "-544*x3^3*x4*x1^2",
    "2436*x2^3*x3*x4*x1^2", "357*x2^4*x5*x1^2", "-156*x2*x3^2*x5*x1^2",
    "-3/7*x4^2*x5*x1^2", "48*x2^2*x4*x5*x1^2", "84*x2^2*x3*x6*x1^2",
    "156/7*x3*x4*x6*x1^2", "-6/7*x2*x5*x6*x1^2", "5439*x2^7*x1",
    "-812*x2*x3^4*x1", "-6*x2*x4^3*x1", "6468*x2^4*x3^2*x1",
    "147*x2^3*x4^2*x1", "54*x3^2*x4^2*x1", "5/2*x2^2*x5^2*x1",
    "-5/14*x4*x5^2*x1", "9/7*x2*x6^2*x1", "1764*x2^5*x4*x1",
    "42*x2^2*x3^2*x4*x1", "160/3*x3^3*x5*x1", "140*x2^3*x3*x5*x1",
    "20*x2*x3*x4*x5*x1", "294*x2^4*x6*x1", "-12*x2*x3^2*x6*x1",
    "9/7*x4^2*x6*x1", "36*x2^2*x4*x6*x1", "-10/7*x3*x5*x6*x1",
    "1484/15*x3^5", "1666/3*x2^3*x3^3", "x3*x4^3", "1/84*x5^3",
    "7*x2^2*x3*x4^2", "-1/2*x2*x3*x5^2", "1/7*x3*x6^2", "1029*x2^6*x3",
    "364/3*x2*x3^3*x4", "392*x2^4*x3*x4", "49/5*x2^5*x5",
    "21*x2^2*x3^2*x5", "-1/2*x2*x4^2*x5", "7*x2^3*x4*x5", "-6*x3^2*x4*x5",
    "-20/3*x3^3*x6", "84*x2^3*x3*x6", "8*x2*x3*x4*x6", "2*x2^2*x5*x6",
    "1/7*x4*x5*x6",
]

WEIGHTS7 = (1, 2, 3, 4, 5, 6, 7)  # 7 * (w_1 .. w_7)


@dataclass(frozen=True)
class PotentialE7:
    F_poly: MPoly          # the polynomial part, including the pairing block
    F_alg: AlgElem         # the z^5-part reduced to (8/105) w^2 z
    F: AlgElem             # the full potential
    v: MPoly


@lru_cache(maxsize=1)
def potential():
    """The algebraic potential, with homogeneity self-audits."""
    f_poly = _RP.zero()
    for text in _F_TERMS:
        term = parse_poly(text, _RP)
        assert term.weighted_degree(WEIGHTS7) == 15, text
        f_poly = f_poly + term
    assert f_poly.coeff_in("x1", 15) == _RP.const(mpq(3939238656, 1092455))
    f_alg = AlgElem(_RP.zero(), w_poly() ** 2 * mpq(8, 105), normalize=False)
    f = AlgElem(f_poly, normalize=False) + f_alg
    ef = f.euler()
    scaled = f * mpq(15, 7)
    assert ef == scaled, "Euler homogeneity EF = (15/7) F failed"
    return PotentialE7(f_poly, f_alg, f, v_poly())


@dataclass(frozen=True)
class FrobMatrices:
    C: tuple
    B: tuple                # B[j-1] is the x_j-derivative of C
    T: tuple


@lru_cache(maxsize=1)
def matrices():
    """C_{ij} = d^2 F / dx_i dx_{8-j}, the seven B_j = d_j C, and T = EC."""
    f = potential().F
    first = [f.partial(i) for i in range(1, 8)]
    c = tuple(tuple(first[i - 1].partial(8 - j) for j in range(1, 8))
              for i in range(1, 8))
    b = tuple(tuple(tuple(c[i][j].partial(m) for j in range(7)) for i in range(7))
              for m in range(1, 8))
    t = tuple(tuple(c[i][j].euler() for j in range(7)) for i in range(7))
    return FrobMatrices(c, b, t)


def b7_is_identity(mats=None):
    m = mats or matrices()
    one = AlgElem(_RP.one(), normalize=False)
    zero = AlgElem(_RP.zero(), normalize=False)
    for i in range(7):
        for j in range(7):
            want = one if i == j else zero
            if m.B[6][i][j] != want:
                return False
    return True


def c_is_pairing_symmetric(mats=None):
    m = mats or matrices()
    return all(m.C[i][j] == m.C[6 - j][6 - i] for i in range(7) for j in range(7))


def _mat_mul(a, b):
    n = len(a)
    return [[sum((a[i][l] * b[l][j] for l in range(n)),
                 AlgElem(_RP.zero(), normalize=False)) for j in range(n)]
            for i in range(n)]


def commutator_defects(mats=None):
    """All (j, k, i, l) where [B_j, B_k] has a nonzero entry."""
    m = mats or matrices()
    defects = []
    for j in range(7):
        for k in range(j + 1, 7):
            jk = _mat_mul(m.B[j], m.B[k])
            kj = _mat_mul(m.B[k], m.B[j])
            for i in range(7):
                for l in range(7):
                    if jk[i][l] != kj[i][l]:
                        defects.append((j + 1, k + 1, i + 1, l + 1))
    return defects


_RZ = Ring(("x1", "x2", "x3", "x4", "x5", "x7", "z"))
DETT_WEIGHTS7 = (1, 2, 3, 4, 5, 7, 3)  # 7 * weights, wt(z) = 3/7


def _x6_substitution():
    sub = {f"x{i}": _RZ.gen(f"x{i}") for i in range(1, 6)}
    sub["x7"] = _RZ.gen("x7")
    z = _RZ.gen("z")
    v6 = v_poly().substitute({**sub, "x6": _RZ.zero(), "x7": _RZ.zero()}, ring=_RZ)
    sub["x6"] = v6 + z * z
    return sub


def dett_entry(i, j):
    """Entry (i, j) of T eliminated to (x1..x5, x7, z): (numerator, z-power).

    Substitutes x6 = v + z^2 (so w becomes z^2); the entry equals
    numerator / z^(2 k).
    """
    e = matrices().T[i][j]
    sub = _x6_substitution()
    z = _RZ.gen("z")
    num = e.p.substitute(sub, ring=_RZ) + e.q.substitute(sub, ring=_RZ) * z
    return num, e.k


_TRANSFORM_TEXT = {
    "x1": "-3*c7^2*t1",
    "x2": "-117/7*c7^4*t1^2 - 12*c7^4*t2",
    "x3": "-168*c7^6*s3 - 4743/7*c7^6*t1^3 - 612*c7^6*t1*t2 + 504*c7^6*t3",
    "x4": "-1/2*c7*s3*t1 - 105/64*c7*t1^4 - 15/8*c7*t1^2*t2 + 3/2*c7*t1*t3"
          " - 1/4*c7*t2^2 + c7*t4",
    "x5": "-825/14*c7^3*s3*t1^2 + 6*c7^3*s3*t2"
          " - 1757745/10976*c7^3*t1^5 - 306075/1372*c7^3*t1^3*t2"
          " + 2475/14*c7^3*t1^2*t3 - 825/14*c7^3*t1*t2^2"
          " + 66*c7^3*t1*t4 + 66*c7^3*t2*t3 - 84*c7^3*t5",
    "x7": "32269440/843308032*s3^2*t1 - 747369560/843308032*s3*t1^4"
          " - 481736640/843308032*s3*t1^2*t2 + 408746240/843308032*s3*t1*t3"
          " + 32269440/843308032*s3*t2^2 - 180708864/843308032*s3*t4"
          " - 1498061973/843308032*t1^7 - 2850681036/843308032*t1^5*t2"
          " + 2242108680/843308032*t1^4*t3 - 1494739120/843308032*t1^3*t2^2"
          " + 686109760/843308032*t1^3*t4 + 2058329280/843308032*t1^2*t2*t3"
          " - 613119360/843308032*t1^2*t5 - 160578880/843308032*t1*t2^3"
          " + 408746240/843308032*t1*t2*t4 - 613119360/843308032*t1*t3^2"
          " + 204373120/843308032*t2^2*t3 - 301181440/843308032*t2*t5"
          " - 301181440/843308032*t3*t4 + t7",
    "z": "-2352*c7^6*s3",
}

_RT = Ring(("s3", "t1", "t2", "t3", "t4", "t5", "t7"), QC7)


@lru_cache(maxsize=1)
def transform_polys():
    return {k: parse_poly(t, _RT) for k, t in _TRANSFORM_TEXT.items()}


TRANSFORM_WEIGHTS = (3, 1, 2, 3, 4, 5, 7)  # s3, t1..t5, t7


@lru_cache(maxsize=1)
def _transform_images():
    """Images of x1..x7 and z in the parameter ring over Q(c7)."""
    tf = transform_polys()
    sub = {k: tf[k] for k in ("x1", "x2", "x3", "x4", "x5", "x7")}
    zimg = tf["z"]
    v_img = v_poly().substitute({**sub, "x6": _RT.zero(), "x7": _RT.zero()}, ring=_RT)
    sub["x6"] = v_img + zimg * zimg
    return sub, zimg


@lru_cache(maxsize=1)
def det_T_transformed():
    """det(T) after the tabulated coordinate transformation.

    Each entry is mapped into the parameter ring over Q(c7) first (where the
    image of z is a monomial, so denominators clear trivially); since a ring
    homomorphism commutes with determinants, this equals the transform of
    det(T) itself.
    """
    m = matrices()
    sub, zimg = _transform_images()
    z2 = zimg * zimg
    nums, ks = [], []
    for row in m.T:
        nums.append([e.p.substitute(sub, ring=_RT)
                     + e.q.substitute(sub, ring=_RT) * zimg for e in row])
        ks.append([e.k for e in row])
    cleared = []
    total = 0
    for i in range(7):
        top = max(ks[i])
        total += top
        cleared.append([nums[i][j] * z2 ** (top - ks[i][j]) for j in range(7)])
    det = laplace_det_rows(cleared)
    out = det.exact_divide(z2 ** total) if total else det
    assert out.weighted_degree(TRANSFORM_WEIGHTS) == 49
    return out


def transform_and_compare(delta):
    """Return the constant ratio kappa with det(T)(transform) = kappa * delta."""
    lhs = det_T_transformed()
    rhs = delta.substitute({v: _RT.gen(v) for v in delta.ring.vars}, ring=_RT) \
        if delta.ring is not _RT else delta
    e, c = rhs.leading()
    le = lhs.terms.get(e)
    if le is None:
        raise AssertionError("transformed det(T) misses the leading monomial")
    kappa = le * (c.inverse() if hasattr(c, "inverse") else 1 / c)
    if lhs != rhs * kappa:
        raise AssertionError("transformed det(T) is not proportional to delta")
    return kappa
