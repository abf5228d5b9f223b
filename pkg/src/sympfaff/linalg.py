"""Small exact linear algebra helpers on list-of-list matrices.

Everything here is exact: entries are ints, Fractions, or prime-field
elements.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int):
    return [[0] * cols for _ in range(rows)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(cols):
            s = 0
            for t in range(k):
                x = ai[t]
                y = b[t][j]
                if x and y:
                    s = s + x * y
            row.append(s)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def J_matrix(n: int):
    """The standard symplectic form: identity block upper right, minus lower left."""
    if n % 2 != 0:
        raise ValueError("J is only defined for even n")
    r = n // 2
    j = zeros(n, n)
    for i in range(r):
        j[i][r + i] = 1
        j[r + i][i] = -1
    return j


def is_skew_zero_diag(m) -> bool:
    n = len(m)
    for i in range(n):
        if m[i][i] != 0:
            return False
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                return False
    return True


def det_exact(m) -> Fraction:
    """Determinant by exact Gaussian elimination (independent of pfaffians)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] * inv
                for j in range(col, n):
                    a[i][j] -= f * a[col][j]
    return det


def mat_inverse(m):
    """Exact inverse over the rationals; raises on a singular matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def charpoly(m) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(T*I - M) by the trace recursion."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]
    big_n = identity(n)
    mn = None
    for k in range(1, n + 1):
        mn = mat_mul(a, big_n)
        ck = -sum(mn[i][i] for i in range(n)) / k
        coeffs.append(ck)
        big_n = [[mn[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


class SparseEchelon:
    """Incremental row echelon form over an exact field, with sparse rows.

    Rows are dicts column -> coefficient.  Columns are compared by their
    position in the column order supplied at construction (ints work too).
    Pivot rows are normalized to leading coefficient one so that reduction
    of query vectors is canonical.
    """

    def __init__(self, field):
        self.field = field
        self.pivot_rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        """Return the residual of `row` against the current pivots."""
        v = {c: x for c, x in row.items() if x}
        # eliminating at a column only introduces larger columns, so an
        # ascending sweep that rescans for new pivot hits terminates
        while True:
            hit = [c for c in v if c in self.pivot_rows]
            if not hit:
                return v
            col = min(hit)
            f = v.pop(col)
            piv = self.pivot_rows[col]
            for c, x in piv.items():
                if c == col:
                    continue
                nv = v.get(c, self.field.zero) - f * x
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)

    def add_row(self, row: dict) -> bool:
        """Insert a row; returns True if it increased the rank."""
        v = self.reduce(row)
        if not v:
            return False
        lead = min(v)
        inv = self.field.one / v[lead]
        piv = {c: x * inv for c, x in v.items()}
        # keep existing pivot rows reduced against the new pivot
        for col, prow in self.pivot_rows.items():
            if lead in prow:
                f = prow.pop(lead)
                for c, x in piv.items():
                    if c == lead:
                        continue
                    nv = prow.get(c, self.field.zero) - f * x
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.pivot_rows[lead] = piv
        return True


def rank_of_rows(rows, field) -> int:
    ech = SparseEchelon(field)
    for row in rows:
        ech.add_row(row)
    return ech.rank


def dense_rank(matrix, field=None) -> int:
    """Rank of a dense matrix of exact scalars."""
    from .scalars import RationalField

    field = field or RationalField()
    rows = []
    for row in matrix:
        rows.append({j: field.of(x) for j, x in enumerate(row) if x})
    return rank_of_rows(rows, field)
