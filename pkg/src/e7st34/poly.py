"""Sparse multivariate polynomials over Q or a simple extension field.

Terms are kept as a dict mapping exponent tuples to nonzero coefficients.
Printing is canonical (graded reverse lexicographic, descending), and the
printer output re-parses to the same polynomial.
"""

import re

from gmpy2 import mpq

from .fields import ExtField, FieldElem, QQ, rational


class InexactDivision(Exception):
    """Raised when exact_divide is asked for a division that does not come out even."""


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class Ring:
    """An ordered list of variable names plus a coefficient field."""

    def __init__(self, variables, field: ExtField = QQ):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.field = field
        self.nvars = len(self.vars)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"Ring({','.join(self.vars)}; {self.field.name})"

    def coerce_scalar(self, c):
        """Coerce int/mpq/FieldElem into the coefficient domain."""
        return self.field(c)

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.coerce_scalar(c)
        if self.field.is_zero(c):
            return MPoly(self, {})
        return MPoly(self, {self._zero_exp: c})

    def gen(self, name):
        i = self.index[name]
        e = [0] * self.nvars
        e[i] = 1
        return MPoly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(v) for v in self.vars]

    def monomial(self, exps, coeff=1):
        c = self.coerce_scalar(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return MPoly(self, {tuple(exps): c})

    def parse(self, text):
        return parse_poly(text, self)


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic predicates ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, mpq, FieldElem)):
            other = self.ring.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring is not self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, mpq, FieldElem)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self.terms) < len(o.terms):
            self, o = o, self
        terms = dict(self.terms)
        zero = self.ring.field.is_zero
        for e, c in o.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if zero(s):
                    del terms[e]
                else:
                    terms[e] = s
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, mpq, FieldElem)):
            c = self.ring.coerce_scalar(other)
            if self.ring.field.is_zero(c):
                return self.ring.zero()
            return MPoly(self.ring, {e: a * c for e, a in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self.terms) < len(o.terms):
            self, o = o, self
        terms = {}
        zero = self.ring.field.is_zero
        for e2, c2 in o.terms.items():
            for e1, c1 in self.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                if s is None:
                    terms[e] = c1 * c2
                else:
                    terms[e] = s + c1 * c2
        return MPoly(self.ring, {e: c for e, c in terms.items() if not zero(c)})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        acc = self.ring.one()
        val = self
        while n:
            if n & 1:
                acc = acc * val
            val = val * val if n > 1 else val
            n >>= 1
        return acc

    def __truediv__(self, other):
        """Division by a nonzero scalar only; use exact_divide for polynomials."""
        if isinstance(other, (int, mpq, FieldElem)):
            c = self.ring.coerce_scalar(other)
            if self.ring.field.is_zero(c):
                raise ZeroDivisionError("division by zero scalar")
            if isinstance(c, FieldElem):
                inv = c.inverse()
            else:
                inv = 1 / c
            return self * inv
        return NotImplemented

    # -- structure -------------------------------------------------------

    def degree(self):
        """Total degree, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var):
        i = self.ring.index[var]
        return max((e[i] for e in self.terms), default=-1)

    def coeff_in(self, var, power):
        """The coefficient of var^power, as a polynomial with var-exponent 0."""
        i = self.ring.index[var]
        terms = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                terms[tuple(e2)] = c
        return MPoly(self.ring, terms)

    def as_univariate(self, var):
        """Dense coefficient list [c0, ..., cd] in var, entries MPoly."""
        d = self.degree_in(var)
        if d < 0:
            return [self.ring.zero()]
        return [self.coeff_in(var, k) for k in range(d + 1)]

    def vars_used(self):
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.ring.vars[i])
        return used

    def leading(self, key=grevlex_key):
        """(exponent, coefficient) of the leading term under the given key."""
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def derivative(self, var):
        i = self.ring.index[var]
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                terms[tuple(e2)] = c * k
        return MPoly(self.ring, terms)

    def weighted_degree(self, weights):
        """Common weighted degree of all terms, or the string "inhomogeneous"."""
        if len(weights) != self.ring.nvars:
            raise ValueError("weights length mismatch")
        ws = [rational(w) for w in weights]
        deg = None
        for e in self.terms:
            d = sum(w * k for w, k in zip(ws, e) if k)
            if deg is None:
                deg = d
            elif d != deg:
                return "inhomogeneous"
        return deg if deg is not None else mpq(0)

    def substitute(self, assignments, ring=None):
        """Ring homomorphism sending each named variable to the given value.

        Unassigned variables map to the generator of the same name in the
        target ring (default: this ring).
        """
        target = ring if ring is not None else self.ring
        images = []
        for v in self.ring.vars:
            if v in assignments:
                img = assignments[v]
                if not isinstance(img, MPoly):
                    img = target.const(img)
                elif img.ring is not target:
                    raise ValueError("assignment not in target ring")
            else:
                img = target.gen(v)
            images.append(img)
        # fast path: every image is a monomial -> remap exponents directly
        if all(len(im.terms) == 1 for im in images):
            base = [next(iter(im.terms.items())) for im in images]
            terms = {}
            zero = target.field.is_zero
            for e, c in self.terms.items():
                exp = [0] * target.nvars
                coeff = target.coerce_scalar(c)
                for i, k in enumerate(e):
                    if k:
                        be, bc = base[i]
                        for j, x in enumerate(be):
                            if x:
                                exp[j] += x * k
                        if bc != 1:
                            coeff = coeff * bc ** k if isinstance(bc, FieldElem) else coeff * bc ** k
                t = tuple(exp)
                s = terms.get(t)
                s = coeff if s is None else s + coeff
                if zero(s):
                    terms.pop(t, None)
                else:
                    terms[t] = s
            return MPoly(target, terms)
        powers = [{0: target.one()} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                m = max(cache)
                p = cache[m]
                while m < k:
                    p = p * images[i]
                    m += 1
                    cache[m] = p
            return cache[k]

        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a scalar point (dict var -> scalar); returns a scalar."""
        field = self.ring.field
        vals = [field(point[v]) if v in point else None for v in self.ring.vars]
        acc = field.zero
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise ValueError(f"no value for {self.ring.vars[i]}")
                    t = t * vals[i] ** k
            acc = acc + t
        return acc

    def exact_divide(self, divisor):
        """Quotient self/divisor when the division is exact; InexactDivision otherwise."""
        if isinstance(divisor, (int, mpq, FieldElem)):
            return self / divisor
        d = self._coerce(divisor)
        if d is None or d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        de, dc = d.leading()
        dc_inv = dc.inverse() if isinstance(dc, FieldElem) else 1 / dc
        q_terms = {}
        r = self
        while r.terms:
            re_, rc = r.leading()
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(x < 0 for x in qe):
                raise InexactDivision(f"{d} does not divide the given polynomial")
            qc = rc * dc_inv
            q_terms[qe] = qc
            r = r - MPoly(self.ring, {qe: qc}) * d
        return MPoly(self.ring, q_terms)

    def content(self):
        """Positive rational content (Q coefficients only)."""
        if self.ring.field.degree != 1:
            raise ValueError("content is defined over Q here")
        from math import gcd
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, int(c.numerator))
            den = den * int(c.denominator) // gcd(den, int(c.denominator))
        if num == 0:
            return mpq(0)
        return mpq(num, den)

    def map_coefficients(self, fn, ring=None):
        target = ring if ring is not None else self.ring
        terms = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if not target.field.is_zero(c2):
                terms[e] = c2
        return MPoly(target, terms)

    # -- printing --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        gen_name = ring.field.gen_name
        pieces = []  # (exponent, rational coeff, generator power)
        for e in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[e]
            if isinstance(c, FieldElem):
                for i, q in enumerate(c.coords):
                    if q:
                        pieces.append((e, q, i))
            else:
                pieces.append((e, c, 0))
        parts = []
        for e, q, gp in pieces:
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(ring.vars[i])
                elif k > 1:
                    factors.append(f"{ring.vars[i]}^{k}")
            if gp == 1:
                factors.append(gen_name)
            elif gp > 1:
                factors.append(f"{gen_name}^{gp}")
            aq = abs(q)
            if not factors:
                body = str(aq)
            elif aq == 1:
                body = "*".join(factors)
            else:
                body = str(aq) + "*" + "*".join(factors)
            parts.append(("-" if q < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        s = str(self)
        return s if len(s) <= 120 else s[:117] + "..."


# -- parsing -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


def parse_poly(text, ring):
    """Parse the polynomial text grammar: terms joined by +/-, factors by *."""
    tokens = _tokenize(text)
    n = len(tokens)
    i = 0

    def peek():
        return tokens[i] if i < n else (None, None, len(text))

    def number():
        # [sign] int [/ int]
        nonlocal i
        sign = 1
        kind, val, pos = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            kind, val, pos = peek()
        if kind != "num":
            raise ParseError("expected a number", pos)
        i += 1
        num = val
        kind, val, pos = peek()
        if kind == "op" and val == "/":
            i += 1
            kind, val, pos = peek()
            if kind != "num":
                raise ParseError("expected a denominator", pos)
            i += 1
            return mpq(sign * num, val)
        return mpq(sign * num)

    def factor():
        nonlocal i
        kind, val, pos = peek()
        if kind == "op" and val == "(":
            i += 1
            c = number()
            kind, val, pos = peek()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            i += 1
            return ring.const(c)
        if kind == "num" or (kind == "op" and val in "+-"):
            return ring.const(number())
        if kind == "name":
            i += 1
            exp = 1
            kind2, val2, pos2 = peek()
            if kind2 == "op" and val2 == "^":
                i += 1
                kind2, val2, pos2 = peek()
                if kind2 != "num":
                    raise ParseError("expected an exponent", pos2)
                i += 1
                exp = val2
            if val in ring.index:
                return ring.gen(val) ** exp
            if val == ring.field.gen_name:
                return ring.const(ring.field.gen ** exp)
            raise ParseError(f"unknown variable {val!r}", pos)
        raise ParseError("expected a factor", pos)

    def term():
        nonlocal i
        p = factor()
        while True:
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                i += 1
                p = p * factor()
            else:
                return p

    result = ring.zero()
    first = True
    while i < n:
        kind, val, pos = peek()
        if first:
            neg = False
            if kind == "op" and val in "+-":
                neg = val == "-"
                i += 1
            t = term()
            result = result + (-t if neg else t)
            first = False
        else:
            if not (kind == "op" and val in "+-"):
                raise ParseError("expected '+' or '-'", pos)
            i += 1
            t = term()
            result = result + (-t if val == "-" else t)
    return result


# -- derived operations --------------------------------------------------

def sylvester_matrix(p, q, var):
    """Sylvester matrix of p, q with respect to var, entries var-free MPolys."""
    cp = p.as_univariate(var)
    cq = q.as_univariate(var)
    m, k = len(cp) - 1, len(cq) - 1
    if m < 0 or k < 0:
        raise ValueError("resultant of a zero polynomial")
    ring = p.ring
    size = m + k
    rows = [[ring.zero()] * size for _ in range(size)]
    for r in range(k):
        for j, c in enumerate(reversed(cp)):
            rows[r][r + j] = c
    for r in range(m):
        for j, c in enumerate(reversed(cq)):
            rows[k + r][r + j] = c
    return rows


def resultant(p, q, var):
    """Determinant of the Sylvester matrix of p and q in var."""
    from .linalg import bareiss_det_rows
    cp_deg = p.degree_in(var)
    cq_deg = q.degree_in(var)
    if cp_deg <= 0 and cq_deg <= 0:
        raise ValueError("resultant needs at least one polynomial of positive degree")
    if cp_deg + cq_deg == max(cp_deg, cq_deg):
        # one operand is var-free: Res(p, c) = c^deg(p)
        const, poly = (q, p) if cq_deg <= 0 else (p, q)
        return const ** poly.degree_in(var)
    return bareiss_det_rows(sylvester_matrix(p, q, var))


def rational_roots(p, var=None):
    """Rational roots of a univariate polynomial over Q, as (root, multiplicity) pairs."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.ring.field.degree != 1:
        raise ValueError("rational_roots works over Q")
    used = p.vars_used()
    if var is None:
        if len(used) > 1:
            raise ValueError("polynomial is not univariate")
        var = next(iter(used)) if used else p.ring.vars[0]
    elif used - {var}:
        raise ValueError("polynomial is not univariate in the given variable")
    import sympy
    x = sympy.Symbol("X")
    coeffs = p.as_univariate(var)
    sp = sympy.Poly(
        [sympy.Rational(int(c.constant_coeff().numerator), int(c.constant_coeff().denominator))
         for c in reversed(coeffs)],
        x, domain="QQ",
    )
    roots = []
    for r, mult in sp.ground_roots().items():
        rr = sympy.Rational(r)
        roots.append((mpq(int(rr.p), int(rr.q)), int(mult)))
    roots.sort(key=lambda t: t[0])
    return roots


def gcd_univariate(p, q, var):
    """Monic gcd of two univariate (in var) polynomials over the coefficient field."""
    ring = p.ring

    def univ(poly):
        return [c.constant_coeff() for c in poly.as_univariate(var)]

    for poly in (p, q):
        if poly.vars_used() - {var}:
            raise ValueError("not univariate in the given variable")
    a, b = univ(p), univ(q)

    def strip(c):
        while c and ring.field.is_zero(c[-1]):
            c.pop()
        return c

    a, b = strip(a), strip(b)
    while b:
        # a mod b
        lb = b[-1]
        inv = lb.inverse() if isinstance(lb, FieldElem) else 1 / lb
        db = len(b) - 1
        r = list(a)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv
            if not ring.field.is_zero(c):
                for j in range(db + 1):
                    r[i - db + j] = r[i - db + j] - c * b[j]
        a, b = b, strip(r[:db] if db > 0 else [])
    if not a:
        return ring.zero()
    la = a[-1]
    inv = la.inverse() if isinstance(la, FieldElem) else 1 / la
    out = ring.zero()
    xv = ring.gen(var)
    for k, c in enumerate(a):
        out = out + ring.const(c * inv) * xv ** k
    return out
