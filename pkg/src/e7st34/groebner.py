"""Buchberger Groebner bases, quotient dimensions and local multiplicities."""

import hashlib
from itertools import combinations

from .fields import FieldElem
from .poly import MPoly


class MonomialOrder:
    """grevlex | lex | grlex, with an optional variable permutation.

    The permutation lists variable indices by decreasing priority; identity
    by default.
    """

    def __init__(self, kind="grevlex", perm=None):
        if kind not in ("grevlex", "lex", "grlex"):
            raise ValueError(f"unknown order {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None

    def key(self, e):
        if self.perm is not None:
            e = tuple(e[i] for i in self.perm)
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e), e)
        return (sum(e), tuple(-x for x in reversed(e)))

    def __repr__(self):
        return f"MonomialOrder({self.kind}, perm={self.perm})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _leading(p, key):
    e = max(p.terms, key=key)
    return e, p.terms[e]


def _monic(p, key):
    _, c = _leading(p, key)
    inv = c.inverse() if isinstance(c, FieldElem) else 1 / c
    return p * inv


def _divides(e, f):
    return all(a <= b for a, b in zip(e, f))


def normal_form(p, basis, order):
    """Remainder of p on full division by the list basis."""
    key = order.key
    ring = p.ring
    lead = [(_leading(g, key)[0], g) for g in basis]
    r = ring.zero()
    while p.terms:
        e, c = _leading(p, key)
        for ge, g in lead:
            if _divides(ge, e):
                qe = tuple(a - b for a, b in zip(e, ge))
                gc = g.terms[ge]
                qc = c * (gc.inverse() if isinstance(gc, FieldElem) else 1 / gc)
                p = p - MPoly(ring, {qe: qc}) * g
                break
        else:
            t = MPoly(ring, {e: c})
            r = r + t
            p = p - t
    return r


class GroebnerBasis:
    def __init__(self, generators, order, fingerprint):
        self.generators = generators
        self.order = order
        self.fingerprint = fingerprint
        self.ring = generators[0].ring

    def leading_exponents(self):
        return [_leading(g, self.order.key)[0] for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def buchberger(gens, order=GREVLEX):
    """Reduced monic Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    key = order.key
    fingerprint = hashlib.sha256(
        ("\n".join(sorted(str(g) for g in gens)) + f"|{order.kind}|{order.perm}").encode()
    ).hexdigest()

    basis = [_monic(g, key) for g in gens]
    # drop duplicates up front
    seen = set()
    uniq = []
    for g in basis:
        s = frozenset(g.terms.items())
        if s not in seen:
            seen.add(s)
            uniq.append(g)
    basis = uniq

    def lcm_exp(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    pairs = set(combinations(range(len(basis)), 2))
    lead = [_leading(g, key)[0] for g in basis]
    while pairs:
        # normal strategy: smallest lcm of leading monomials first
        i, j = min(pairs, key=lambda ij: key(lcm_exp(lead[ij[0]], lead[ij[1]])))
        pairs.discard((i, j))
        ei, ej = lead[i], lead[j]
        l = lcm_exp(ei, ej)
        # Buchberger's first criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(ei, ej, l)):
            continue
        # chain criterion: some k with lt(k) | lcm and both (i,k),(j,k) done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(lead[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        gi, gj = basis[i], basis[j]
        mi = MPoly(ring, {tuple(a - b for a, b in zip(l, ei)): ring.field.one})
        mj = MPoly(ring, {tuple(a - b for a, b in zip(l, ej)): ring.field.one})
        s = mi * gi - mj * gj
        r = normal_form(s, basis, order)
        if not r.is_zero():
            r = _monic(r, key)
            basis.append(r)
            lead.append(_leading(r, key)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    # minimalize: drop g whose leading monomial is divisible by another's
    minimal = []
    for i, g in enumerate(basis):
        e = lead[i]
        if any(j != i and _divides(lead[j], e) and (lead[j] != e or j < i) for j in range(len(basis))):
            continue
        minimal.append(g)
    # reduce: replace each by its normal form against the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order) if others else g
        if not r.is_zero():
            reduced.append(_monic(r, key))
    reduced.sort(key=lambda g: key(_leading(g, key)[0]), reverse=True)
    return GroebnerBasis(reduced, order, fingerprint)


def quotient_dimension(gb):
    """Number of standard monomials of the leading-term ideal; "infinite" if unbounded."""
    lead = gb.leading_exponents()
    n = gb.ring.nvars
    if any(not any(e) for e in lead):
        return 0  # the ideal is the whole ring
    # the staircase is finite iff every variable has a pure-power leading monomial
    bounds = []
    for i in range(n):
        pure = [e[i] for e in lead if sum(e) == e[i] and e[i] > 0]
        if not pure:
            return "infinite"
        bounds.append(min(pure))
    from itertools import product
    count = 0
    for e in product(*(range(b) for b in bounds)):
        if not any(_divides(le, e) for le in lead):
            count += 1
    return count


def local_multiplicity_at_origin(gens, n_max=64):
    """Dimension at the origin of ring/<gens>, by m^N-truncation stabilization.

    Returns the stabilized truncated dimension, or "infinite" when no
    stabilization occurs by n_max.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    for g in gens:
        if not ring.field.is_zero(g.constant_coeff()):
            raise ValueError("origin is not a common zero of the generators")
    prev = None
    for n in range(1, n_max + 1):
        monoms = _degree_monomials(ring, n)
        gb = buchberger(gens + monoms, GREVLEX)
        d = quotient_dimension(gb)
        if d == prev:
            return d
        prev = d
    return "infinite"


def _degree_monomials(ring, n):
    """All monomials of total degree n as MPolys."""
    out = []

    def rec(i, left, exp):
        if i == ring.nvars - 1:
            out.append(ring.monomial(exp + (left,)))
            return
        for k in range(left + 1):
            rec(i + 1, left - k, exp + (k,))

    rec(0, n, ())
    return out
