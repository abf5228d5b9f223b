"""Chart machinery for n divisible by 4: rational points with invertible
barred-corner minor, the trace identity behind them, and the
non-zero-divisor closure check for the full-width barred row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .indices import symp_key
from .linalg import det_exact, identity, mat_inverse, mat_mul
from .pfaffians import _perm_sign
from .poly import Poly
from .straighten import multiply_basis
from .tableaux import Tableau, is_symplectic_standard


@dataclass(frozen=True)
class ChartDatum:
    """A symmetric block and an invertible skew block of size r (r even)."""

    a: tuple
    c: tuple

    def __post_init__(self):
        a = tuple(tuple(row) for row in self.a)
        c = tuple(tuple(row) for row in self.c)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        r = len(a)
        if r % 2:
            raise ValueError("the chart needs an even block size r")
        if len(c) != r or any(len(row) != r for row in a + c):
            raise ValueError("blocks must be square of equal size")
        for i in range(r):
            for j in range(r):
                if a[i][j] != a[j][i]:
                    raise ValueError("first block must be symmetric")
                if c[i][j] != -c[j][i]:
                    raise ValueError("second block must be skew")
        if det_exact(list(map(list, c))) == 0:
            raise ValueError("skew block must be invertible")

    @property
    def r(self) -> int:
        return len(self.a)


def random_chart_datum(r: int, seed, bound: int = 4) -> ChartDatum:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            a[i][j] = a[j][i] = rng.randint(-bound, bound)
    while True:
        c = [[0] * r for _ in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                v = rng.randint(-bound, bound)
                c[i][j], c[j][i] = v, -v
        if det_exact(c) != 0:
            return ChartDatum(tuple(map(tuple, a)), tuple(map(tuple, c)))


def chart_point(d: ChartDatum):
    """Build the Grassmannian frame from the chart datum and read off the
    skew point matrix; the result always has an invertible barred minor."""
    r = d.r
    n = 2 * r
    a = [list(row) for row in d.a]
    c = [list(row) for row in d.c]
    z = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            z[i][j] = a[i][j]  # top-left: symmetric block
            z[r + i][j] = c[i][j]  # bottom-left: skew block
            z[r + i][r + j] = -a[j][i]  # bottom-right: minus transpose
    eye = identity(n)
    big_n = z[:r] + eye + z[r:]
    g = big_n[n:]
    g_inv = mat_inverse(g)
    m = mat_mul(big_n, g_inv)
    for i in range(n):
        for j in range(n):
            if m[n + i][j] != (1 if i == j else 0):
                raise RuntimeError("frame normalization failed")
    y = [[Fraction(x) for x in row] for row in m[:n]]
    from .oracle import point_violations

    bad = point_violations(y)
    if bad:
        raise RuntimeError(f"chart produced a non-point: {bad}")
    if f_minor(y) == 0:
        raise RuntimeError("chart produced a point with singular barred minor")
    return y


def trace_identity_check(d: ChartDatum):
    """tr(A C^-1); identically zero for symmetric A and invertible skew C."""
    prod = mat_mul([list(r) for r in d.a], mat_inverse([list(r) for r in d.c]))
    return sum(prod[i][i] for i in range(d.r))


def f_minor(y=None, n: int | None = None):
    """Determinant of the barred-by-barred corner.

    With a point matrix: its exact value.  With n alone: the generic minor
    as a polynomial (Leibniz sum, independent of the pfaffian expansion).
    """
    if y is not None:
        size = len(y)
        r = size // 2
        sub = [[y[i][j] for j in range(r, size)] for i in range(r, size)]
        return det_exact(sub)
    if n is None or n % 4:
        raise ValueError("need a point matrix or a size divisible by 4")
    r = n // 2
    out = Poly.zero(n)
    for perm in permutations(range(r)):
        term = Poly.const(n, _perm_sign(perm))
        for i in range(r):
            term = term * Poly.variable(n, r + 1 + i, r + 1 + perm[i])
        out = out + term
    return out


def barred_row_tableau(r: int) -> Tableau:
    """The single full-width row (1bar, 2bar, ..., rbar)."""
    return Tableau(((tuple(-i for i in range(1, r + 1)),)))


def nzd_closure_check(t: Tableau, r: int) -> bool:
    """Multiplying by the full barred row must prepend it, with unit
    coefficient, staying inside the basis."""
    if r % 2:
        raise ValueError("the closure check needs an even r")
    if not is_symplectic_standard(t) or not t.is_even():
        raise ValueError("expected a symplectic standard even-tableau")
    row = barred_row_tableau(r)
    product = multiply_basis(row, t, r)
    expected_rows = tuple(
        sorted(row.rows + t.rows, key=lambda rw: (-len(rw), tuple(symp_key(x) for x in rw)))
    )
    if len(product) != 1:
        return False
    (tab, coeff), = product.terms.items()
    return tab.rows == expected_rows and coeff in (1, -1)


def chart_suite(n: int, seed: int, count: int) -> dict:
    """Random chart data: every produced point must satisfy the defining
    conditions with nonvanishing barred minor and zero trace identity."""
    if n % 4:
        raise ValueError("the chart needs n divisible by 4")
    r = n // 2
    rng = random.Random(seed)
    from .oracle import point_violations

    results = []
    ok = True
    for k in range(count):
        d = random_chart_datum(r, rng)
        tr = trace_identity_check(d)
        y = chart_point(d)
        bad = point_violations(y)
        fval = f_minor(y)
        entry = {
            "index": k,
            "trace_identity": str(tr),
            "point_ok": not bad,
            "f_nonzero": fval != 0,
        }
        entry["pass"] = tr == 0 and not bad and fval != 0
        ok = ok and entry["pass"]
        results.append(entry)
    return {"n": n, "seed": seed, "count": count, "pass": ok, "results": results}
