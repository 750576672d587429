"""Exact scalars: rationals and simple algebraic extensions of Q.

The three fields used everywhere else are exported as QQ, QW (adjoining a
primitive cube root of unity w, w^2 + w + 1 = 0) and QC7 (adjoining c7 with
c7^7 = 1/14112).
"""

from gmpy2 import mpq


def rational(x) -> mpq:
    """Coerce an int, string or mpq to an exact rational."""
    if isinstance(x, mpq):
        return x
    return mpq(x)


class ExtField:
    """Q[g]/(m(g)) for a monic irreducible m over Q; degree 1 means Q itself.

    min_poly is the coefficient list (c0, ..., c_{d-1}) of
    m(g) = g^d + c_{d-1} g^{d-1} + ... + c0.
    """

    def __init__(self, name, gen_name, min_poly):
        self.name = name
        self.gen_name = gen_name
        self.min_poly = tuple(rational(c) for c in min_poly)
        self.degree = len(self.min_poly)
        if self.degree < 1:
            raise ValueError("minimal polynomial must have positive degree")

    def __repr__(self):
        return f"ExtField({self.name})"

    def __call__(self, x):
        """Coerce x (int / mpq / FieldElem of this field) to an element."""
        if isinstance(x, FieldElem):
            if x.field is not self:
                raise ValueError(f"element of {x.field.name}, expected {self.name}")
            return x
        c = rational(x)
        if self.degree == 1:
            return c
        return FieldElem(self, (c,) + (mpq(0),) * (self.degree - 1))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        """The adjoined generator as a field element."""
        if self.degree == 1:
            raise ValueError("Q has no generator")
        coords = [mpq(0)] * self.degree
        coords[1] = mpq(1)
        return FieldElem(self, tuple(coords))

    def is_zero(self, x):
        if isinstance(x, FieldElem):
            return not any(x.coords)
        return x == 0

    def random_element(self, rng, bound=20):
        coords = [mpq(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(self.degree)]
        if self.degree == 1:
            return coords[0]
        return FieldElem(self, tuple(coords))


class FieldElem:
    """Element of an ExtField of degree >= 2, as a coordinate vector over Q."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, mpq)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, mpq)):
            c = rational(other)
            return FieldElem(self.field, tuple(a * c for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        prod = [mpq(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        m = self.field.min_poly
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = mpq(0)
                for j, mc in enumerate(m):
                    prod[k - d + j] -= c * mc
        return FieldElem(self.field, tuple(prod[:d]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, mpq)):
            c = rational(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return FieldElem(self.field, tuple(a / c for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        val = self
        while n:
            if n & 1:
                acc = acc * val
            val = val * val
            n >>= 1
        return acc

    def inverse(self):
        """Multiplicative inverse by extended Euclid against the minimal polynomial."""
        if not any(self.coords):
            raise ZeroDivisionError("inverse of zero")
        d = self.field.degree
        # m(g) as a coefficient list of length d+1, then xgcd(self, m) over Q[g].
        m = list(self.field.min_poly) + [mpq(1)]
        r0, r1 = m, list(self.coords)
        s0, s1 = [mpq(0)], [mpq(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                coords = [c * inv for c in s1] + [mpq(0)] * (d - len(s1))
                return FieldElem(self.field, tuple(coords[:d]))
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            other = self.field(other)
            if isinstance(other, mpq):
                return False
        if not isinstance(other, FieldElem) or other.field is not self.field:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.name, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        g = self.field.gen_name
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{g}" if c != 1 else g)
            else:
                parts.append(f"{c}*{g}^{i}" if c != 1 else f"{g}^{i}")
        return " + ".join(parts) if parts else "0"


def _poly_divmod(a, b):
    """Division with remainder for dense Q[g] coefficient lists."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [mpq(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lb
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [mpq(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


QQ = ExtField("Q", "", (mpq(0),))
QW = ExtField("Q(w)", "w", (mpq(1), mpq(1)))          # w^2 + w + 1 = 0
QC7 = ExtField("Q(c7)", "c7", (mpq(-1, 14112),) + (mpq(0),) * 6)  # c7^7 = 1/14112
