"""Fraction-free linear algebra for matrices with polynomial entries."""

from .poly import MPoly


def bareiss_det_rows(rows):
    """Bareiss fraction-free determinant of a square list-of-lists.

    Entries need +, -, *, exact_divide and truthiness; all intermediate
    divisions are exact by the Bareiss identity.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    a = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0] - a[0][0]  # a zero of the right type
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num.exact_divide(prev) if prev is not None else num
            a[i][k] = None
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_det_rows(rows):
    """Cofactor-expansion determinant; oracle for small matrices."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * cofactor_det_rows(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return rows[0][0] - rows[0][0]
    return acc


def laplace_det_rows(rows):
    """Determinant by column-subset dynamic programming (Laplace expansion).

    Often much faster than Bareiss for sparse polynomial matrices: minors
    over each column subset are computed once and reused.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    minors = {(): None}
    for i in range(n - 1, -1, -1):
        depth = n - i  # minors of the trailing depth x depth block
        new = {}
        from itertools import combinations
        for cols in combinations(range(n), depth):
            acc = None
            for pos, j in enumerate(cols):
                e = rows[i][j]
                if not e:
                    continue
                sub = minors[tuple(c for c in cols if c != j)]
                term = e if sub is None else e * sub
                if pos % 2:
                    term = -term
                acc = term if acc is None else acc + term
            if acc is None:
                acc = rows[i][0] - rows[i][0]
            new[cols] = acc
        minors = new
    return minors[tuple(range(n))]


class PolyMatrix:
    """Dense matrix of MPoly entries over a shared ring."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")
        rings = {e.ring for row in self.entries for e in row if isinstance(e, MPoly)}
        if len(rings) > 1:
            raise ValueError("entries do not share a ring")
        self.ring = rings.pop() if rings else None

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self):
        return bareiss_det_rows(self.entries)

    def det_cofactor(self):
        return cofactor_det_rows(self.entries)

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in row] for row in self.entries])


def solve_linear(matrix, rhs):
    """Cramer-style exact solution of M x = rhs.

    Returns (numerators, denominator) with x_i = numerators[i] / denominator
    and denominator = det(M). Raises ValueError when det(M) = 0.
    """
    rows = matrix.entries if isinstance(matrix, PolyMatrix) else [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("shape mismatch")
    det = bareiss_det_rows(rows)
    if not det:
        raise ValueError("singular matrix")
    numerators = []
    for j in range(n):
        replaced = [[rhs[i] if k == j else rows[i][k] for k in range(n)] for i in range(n)]
        numerators.append(bareiss_det_rows(replaced))
    return numerators, det
