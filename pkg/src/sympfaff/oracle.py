"""Independent brute-force ground truth: graded dimensions of the coordinate
ring by exact elimination, ideal-membership normal forms, and exact point
sampling on the scheme.

The ideal is presented in its weak form (isotropy plus the single trace
relation), which agrees with the full presentation over the admissible
fields; sampled points are nevertheless validated against the full
characteristic-polynomial condition.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb, factorial

from .exterior import ExtVector, e_PQ, phi, w_vector, wedge
from .linalg import J_matrix, SparseEchelon, charpoly, identity, mat_mul, transpose
from .pfaffians import PfBracket, SympGenerator, bracket_value, pf_bracket_PQ
from .poly import Poly, monomial_mul, monomials_of_degree, var_list
from .scalars import PrimeField, RationalField
from .tableaux import count_symplectic_standard_even, enumerate_symplectic_standard_even
from .indices import enumerate_even_shapes


def ideal_generators(n: int) -> list[Poly]:
    """Degree-1 trace generator and the degree-2 isotropy entries."""
    if n < 4 or n % 2:
        raise ValueError("need an even matrix size n >= 4")
    r = n // 2
    gens = []
    trace = Poly.zero(n)
    for i in range(1, r + 1):
        trace = trace + Poly.variable(n, i, i + r)
    gens.append(trace)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            entry = Poly.zero(n)
            for c in range(1, r + 1):
                entry = entry + Poly.variable(n, c, a) * Poly.variable(n, c + r, b)
                entry = entry - Poly.variable(n, c + r, a) * Poly.variable(n, c, b)
            if entry:
                gens.append(entry)
    return gens


class GradedIdealBasis:
    """Echelonized degree-m slice of the defining ideal."""

    def __init__(self, n: int, m: int, field=None, max_monomials: int = 500_000):
        if n < 4 or n % 2:
            raise ValueError("need an even matrix size n >= 4")
        if m < 0:
            raise ValueError("degree must be nonnegative")
        self.n, self.m = n, m
        self.field = field or RationalField()
        if isinstance(self.field, PrimeField) and self.field.p <= n // 2:
            raise ValueError(f"prime field needs p > r = {n // 2}")
        nv = len(var_list(n))
        est = comb(nv + m - 1, m) if m else 1
        if est > max_monomials:
            raise RuntimeError(
                f"refusing degree {m} at n={n}: {est} monomials exceed the "
                f"budget of {max_monomials}"
            )
        self.monomials = monomials_of_degree(n, m)
        self.col = {mono: i for i, mono in enumerate(self.monomials)}
        self.ech = SparseEchelon(self.field)
        for g in ideal_generators(n):
            d = g.degree
            if d > m:
                continue
            for mono in monomials_of_degree(n, m - d):
                row = {}
                for gm, c in g.terms.items():
                    idx = self.col[monomial_mul(gm, mono)]
                    nc = row.get(idx, self.field.zero) + self.field.of(c)
                    if nc:
                        row[idx] = nc
                    else:
                        row.pop(idx, None)
                if row:
                    self.ech.add_row(row)

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.ech.rank

    def reduce_poly(self, p: Poly) -> dict:
        """Canonical coordinates of p modulo the ideal slice; empty when p
        lies in the ideal."""
        if p.n != self.n:
            raise ValueError("polynomial over the wrong matrix size")
        if p and not p.is_homogeneous():
            raise ValueError("normal form needs a homogeneous polynomial")
        if p and p.degree != self.m:
            raise ValueError(f"expected degree {self.m}, got {p.degree}")
        vec = {self.col[mono]: self.field.of(c) for mono, c in p.terms.items()}
        residual = self.ech.reduce(vec)
        return {self.monomials[i]: c for i, c in sorted(residual.items())}


_BASIS_CACHE: dict = {}


def graded_basis(n: int, m: int, field=None, max_monomials: int = 500_000) -> GradedIdealBasis:
    field = field or RationalField()
    key = (n, m, field)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = GradedIdealBasis(n, m, field, max_monomials)
    return _BASIS_CACHE[key]


def graded_ideal_dimension(n: int, m: int, field=None, max_monomials: int = 500_000) -> int:
    return graded_basis(n, m, field, max_monomials).dim


def normal_form_modulo_ideal(p: Poly, m: int | None = None, field=None) -> dict:
    if m is None:
        if not p:
            return {}
        if not p.is_homogeneous():
            raise ValueError("normal form needs a homogeneous polynomial")
        m = p.degree
    return graded_basis(p.n, m, field).reduce_poly(p)


# ---------------------------------------------------------------------------
# points


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_generator(n: int, rng) -> SympGenerator:
    r = n // 2
    mu = rng.choice([-3, -2, -1, 1, 2, 3])
    kind = rng.choice(["level_mix", "bar_shear", "cross_shear"])
    if kind == "bar_shear":
        return SympGenerator(kind, rng.randrange(1, r + 1), None, mu)
    i, j = rng.sample(range(1, r + 1), 2)
    return SympGenerator(kind, i, j, mu)


def random_symplectic(n: int, seed, steps: int = 8):
    """Product of random elementary symplectic matrices; exact integer."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = _as_rng(seed)
    g = identity(n)
    for _ in range(steps):
        g = mat_mul(g, random_generator(n, rng).matrix(n))
    return g


def point_violations(y) -> list[str]:
    """Which defining conditions of the scheme fail at y; empty means a point."""
    n = len(y)
    r = n // 2
    out = []
    if any(y[i][i] != 0 for i in range(n)):
        out.append("zero_diagonal")
    if any(y[i][j] != -y[j][i] for i in range(n) for j in range(i + 1, n)):
        out.append("skew_symmetry")
    j = J_matrix(n)
    ytjy = mat_mul(mat_mul(transpose(y), j), y)
    if any(ytjy[a][b] != 0 for a in range(n) for b in range(n)):
        out.append("matrix_isotropy")
    if sum(y[i][i + r] for i in range(r)) != 0:
        out.append("trace_sum")
    minus_jy = [[-x for x in row] for row in mat_mul(j, y)]
    coeffs = charpoly(minus_jy)
    if any(c != 0 for c in coeffs[1:]):
        out.append("char_poly")
    return out


def sample_point(n: int, seed, steps: int = 8, bound: int = 4):
    """A block point (random integer skew matrix in the barred corner)
    moved by a random symplectic change of basis."""
    if n < 4 or n % 2:
        raise ValueError("need an even matrix size n >= 4")
    rng = _as_rng(seed)
    r = n // 2
    y = [[0] * n for _ in range(n)]
    for i in range(r):
        for jj in range(i + 1, r):
            v = rng.randint(-bound, bound)
            y[r + i][r + jj] = v
            y[r + jj][r + i] = -v
    g = random_symplectic(n, rng, steps)
    y = mat_mul(mat_mul(transpose(g), y), g)
    bad = point_violations(y)
    if bad:
        raise RuntimeError(f"sampled matrix failed point checks: {bad}")
    return y


# ---------------------------------------------------------------------------
# relation suite at a point


def verify_point_relations(y, max_oversized: int | None = None) -> dict:
    """Exhaustively instantiate every relation family at a point and report
    exact residuals."""
    n = len(y)
    r = n // 2
    levels = list(range(1, r + 1))
    cache: dict = {}

    def bval(p_set, q_set):
        br = pf_bracket_PQ(p_set, q_set)
        if br.is_zero:
            return 0
        got = cache.get(br.indices)
        if got is None:
            got = bracket_value(PfBracket(1, br.indices), y)
            cache[br.indices] = got
        return br.sign * got

    families = []

    def family(name, instances, failures):
        families.append(
            {"name": name, "instances": instances, "failures": failures}
        )

    # trace of the pairing against the point
    tr = 2 * sum(y[i][i + r] for i in range(r))
    family("trace_sum", 1, [] if tr == 0 else [f"2*sum Y[i,ibar] = {tr}"])

    def subset_pairs():
        for pa in range(r + 1):
            for p_rest in combinations(levels, pa):
                for qa in range(r + 1):
                    for q_rest in combinations(levels, qa):
                        yield set(p_rest), set(q_rest)

    # vanishing sums of brackets over fresh shared levels
    count = 0
    fails = []
    for p_rest, q_rest in subset_pairs():
        if (len(p_rest) + len(q_rest)) % 2:
            continue
        free = [x for x in levels if x not in p_rest | q_rest]
        half = (len(p_rest) + len(q_rest)) // 2
        for t in range(1, r - half + 1):
            count += 1
            total = 0
            for gt in combinations(free, t):
                total += bval(p_rest | set(gt), q_rest | set(gt))
            if total != 0:
                fails.append(f"P'={sorted(p_rest)} Q'={sorted(q_rest)} t={t}: {total}")
    family("bracket_family_sum", count, fails)

    # a bracket with shared levels equals the signed sum over fresh ones
    count = 0
    fails = []
    for p_rest, q_rest in subset_pairs():
        if (len(p_rest) + len(q_rest)) % 2:
            continue
        free = [x for x in levels if x not in p_rest | q_rest]
        for gsize in range(1, len(free) + 1):
            for gamma in combinations(free, gsize):
                count += 1
                gset = set(gamma)
                rest = [x for x in free if x not in gset]
                lhs = bval(p_rest | gset, q_rest | gset)
                rhs = 0
                for gp in combinations(rest, gsize):
                    rhs += bval(p_rest | set(gp), q_rest | set(gp))
                resid = lhs - (-1) ** gsize * rhs
                if resid != 0:
                    fails.append(
                        f"P'={sorted(p_rest)} Q'={sorted(q_rest)} G={sorted(gset)}: {resid}"
                    )
    family("bracket_exchange", count, fails)

    # oversized brackets vanish
    count = 0
    fails = []
    limit = max_oversized or 2 * r
    for p_rest, q_rest in subset_pairs():
        size = len(p_rest) + len(q_rest)
        if size % 2 or not (r < size <= limit):
            continue
        count += 1
        val = bval(p_rest, q_rest)
        if val != 0:
            fails.append(f"P={sorted(p_rest)} Q={sorted(q_rest)}: {val}")
    family("oversized_brackets", count, fails)

    # wedge powers expand over brackets with factor 2^m m!
    w = w_vector(y)
    powers: dict[int, ExtVector] = {1: w}
    for m in range(2, r + 1):
        powers[m] = wedge(powers[m - 1], w)
    count = 0
    fails = []
    for m in range(1, r + 1):
        count += 1
        expected = ExtVector.zero(n)
        scale = 2**m * factorial(m)
        for p_rest, q_rest in subset_pairs():
            if len(p_rest) + len(q_rest) != 2 * m:
                continue
            c = bval(p_rest, q_rest)
            if c:
                expected = expected + (scale * c) * e_PQ(p_rest, q_rest, r)
        if powers[m] != expected:
            fails.append(f"m={m}: wedge power mismatch")
    family("wedge_power_coeffs", count, fails)

    # contractions of wedge powers vanish
    count = 0
    fails = []
    for m in range(1, r + 1):
        for t in range(1, m + 1):
            count += 1
            res = phi(powers[m], t)
            if res:
                fails.append(f"m={m} t={t}: nonzero contraction")
    family("contraction_vanishing", count, fails)

    return {
        "n": n,
        "families": families,
        "pass": all(not f["failures"] for f in families),
    }


def verify_points(n: int, count: int, seed: int) -> dict:
    """Sample points and run the relation suite on each."""
    rng = random.Random(seed)
    reports = []
    ok = True
    for k in range(count):
        y = sample_point(n, rng)
        rep = verify_point_relations(y)
        rep["point_index"] = k
        ok = ok and rep["pass"]
        reports.append(rep)
    return {"n": n, "points": count, "seed": seed, "pass": ok, "reports": reports}


# ---------------------------------------------------------------------------
# basis evidence


def dimension_agreement(n: int, m: int, field=None) -> dict:
    dim = graded_ideal_dimension(n, m, field)
    cnt = count_symplectic_standard_even(m, n // 2)
    return {"n": n, "degree": m, "dim": dim, "count": cnt, "agree": dim == cnt}


def basis_tableaux(n: int, m: int):
    r = n // 2
    out = []
    for shape in enumerate_even_shapes(2 * m, min(r, 2 * m) if m else 0):
        out.extend(enumerate_symplectic_standard_even(shape, r))
    return out


def basis_evaluation_rank(n: int, m: int, seed: int, points: int | None = None) -> dict:
    """Rank of the matrix of basis values at sampled points; full column
    rank certifies linear independence in the coordinate ring.

    Rank is taken modulo a large prime first: full rank there is an exact
    certificate of full rank over the rationals (some maximal minor is a
    nonzero integer).  Only a deficient modular rank falls back to exact
    rational elimination.
    """
    from .pfaffians import tableau_to_polynomial
    from .linalg import dense_rank

    basis = basis_tableaux(n, m)
    size = len(basis)
    npts = points if points is not None else 2 * size
    polys = [tableau_to_polynomial(t, n) for t in basis]
    rng = random.Random(seed)
    rows = []
    for _ in range(npts):
        y = sample_point(n, rng)
        rows.append([p.evaluate(y) for p in polys])
    rank = dense_rank(rows, PrimeField(2147483647, n // 2))
    if rank < size:
        rank = dense_rank(rows)
    return {"n": n, "degree": m, "basis_size": size, "points": npts, "rank": rank,
            "full_rank": rank == size}
