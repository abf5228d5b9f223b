"""Pfaffian brackets of the generic skew matrix and their algebra.

A bracket [i1, ..., i2l] is the pfaffian of the principal submatrix picked
out by those indices, in that order.  Brackets are stored sign-normalized
with indices ascending in the matrix-position order; a repeated index makes
the bracket zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import numeric_key, signed_to_position
from .linalg import identity
from .poly import Poly


def sort_parity(seq, key) -> tuple[int, tuple]:
    """Sign of the permutation sorting `seq` by `key`, and the sorted tuple.

    Returns sign 0 when two entries share a key.
    """
    keyed = [(key(x), i) for i, x in enumerate(seq)]
    ks = sorted(keyed)
    for a, b in zip(ks, ks[1:]):
        if a[0] == b[0]:
            return 0, ()
    inv = 0
    for i in range(len(keyed)):
        for j in range(i + 1, len(keyed)):
            if keyed[i][0] > keyed[j][0]:
                inv += 1
    return (-1) ** inv, tuple(sorted(seq, key=key))


@dataclass(frozen=True)
class PfBracket:
    """sign 0 means the zero bracket; otherwise indices are signed ints,
    strictly ascending in position order."""

    sign: int
    indices: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __str__(self):
        if self.is_zero:
            return "0"
        body = ",".join(str(s) if s > 0 else f"{-s}~" for s in self.indices)
        pre = "-" if self.sign < 0 else ""
        return f"{pre}[{body}]"


ZERO_BRACKET = PfBracket(0, ())


def normalize_pf(indices) -> PfBracket:
    """Sign-normalize an even-length list of signed indices."""
    seq = tuple(indices)
    if len(seq) % 2 != 0:
        raise ValueError(f"bracket needs an even number of indices, got {len(seq)}")
    sign, ordered = sort_parity(seq, numeric_key)
    if sign == 0:
        return ZERO_BRACKET
    return PfBracket(sign, ordered)


def pq_index_list(p_set, q_set) -> list[int]:
    """The index list attached to subsets P, Q of {1..r}: shared levels come
    first as (level, barred level) pairs, then the rest of P, then the rest
    of Q barred."""
    p_set, q_set = set(p_set), set(q_set)
    shared = sorted(p_set & q_set)
    seq: list[int] = []
    for g in shared:
        seq.extend((g, -g))
    seq.extend(sorted(p_set - set(shared)))
    seq.extend(-q for q in sorted(q_set - set(shared)))
    return seq


def pf_bracket_PQ(p_set, q_set) -> PfBracket:
    if (len(set(p_set)) + len(set(q_set))) % 2 != 0:
        raise ValueError("|P| + |Q| must be even")
    return normalize_pf(pq_index_list(p_set, q_set))


def _matchings(idx: list[int]):
    """All perfect matchings as flat index sequences (a1,b1,a2,b2,...) with
    a1 < a2 < ... and ai < bi, i.e. the restricted permutations."""
    if not idx:
        yield ()
        return
    first = idx[0]
    rest = idx[1:]
    for k, second in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _matchings(remaining):
            yield (first, second) + tail


def _perm_sign(seq) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return (-1) ** inv


def pf_to_polynomial(b: PfBracket, n: int) -> Poly:
    """Expand a bracket as a polynomial by the signed matching sum."""
    if b.is_zero:
        return Poly.zero(n)
    r = n // 2
    pos = [signed_to_position(s, r) for s in b.indices]
    k = len(pos)
    out = Poly.zero(n)
    for sigma in _matchings(list(range(k))):
        term = Poly.const(n, _perm_sign(sigma))
        for t in range(0, k, 2):
            term = term * Poly.variable(n, pos[sigma[t]], pos[sigma[t + 1]])
        out = out + term
    return b.sign * out


def row_polynomial(row, n: int) -> Poly:
    """Polynomial of a bracket whose indices are listed in row order."""
    return pf_to_polynomial(normalize_pf(row), n)


def tableau_to_polynomial(tab, n: int) -> Poly:
    """Product over the rows of a tableau of their bracket polynomials."""
    out = Poly.const(n, 1)
    for row in tab.rows:
        if len(row) % 2 != 0:
            raise ValueError(f"odd-sized row {row} has no pfaffian")
        out = out * row_polynomial(row, n)
    return out


def pfaffian_value(a):
    """Pfaffian of a skew matrix of exact scalars, by recursive expansion."""
    m = len(a)
    if m % 2 != 0:
        raise ValueError("pfaffian needs an even-sized matrix")
    for i in range(m):
        if a[i][i] != 0:
            raise ValueError("matrix has a nonzero diagonal entry")
        for j in range(i + 1, m):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    memo: dict[tuple, object] = {}

    def rec(active: tuple) -> object:
        if not active:
            return 1
        if active in memo:
            return memo[active]
        first = active[0]
        rest = active[1:]
        total = 0
        for k, other in enumerate(rest):
            coeff = a[first][other]
            if coeff:
                sub = rest[:k] + rest[k + 1 :]
                total = total + (-1) ** k * coeff * rec(sub)
        memo[active] = total
        return total

    return rec(tuple(range(m)))


def bracket_value(b: PfBracket, y):
    """Exact value of a bracket at a point matrix."""
    if b.is_zero:
        return 0
    n = len(y)
    r = n // 2
    pos = [signed_to_position(s, r) - 1 for s in b.indices]
    sub = [[y[i][j] for j in pos] for i in pos]
    return b.sign * pfaffian_value(sub)


def evaluate(p: Poly, y):
    """Evaluate a polynomial at a skew point matrix, with validation."""
    n = len(y)
    if p.n != n:
        raise ValueError(f"polynomial over n={p.n} evaluated at a {n}x{n} matrix")
    for i in range(n):
        if y[i][i] != 0:
            raise ValueError("point matrix has a nonzero diagonal entry")
        for j in range(i + 1, n):
            if y[i][j] != -y[j][i]:
                raise ValueError("point matrix is not skew-symmetric")
    return p.evaluate(y)


@dataclass(frozen=True)
class SympGenerator:
    """One of the three elementary symplectic families.

    level_mix(i, j, mu):   I - mu*E[i,j] + mu*E[jbar,ibar]   (i != j)
    bar_shear(i, mu):      I + mu*E[ibar,i]
    cross_shear(i, j, mu): I + mu*E[jbar,i] + mu*E[ibar,j]   (i != j)
    """

    kind: str
    i: int
    j: int | None
    mu: object

    def __post_init__(self):
        if self.kind not in ("level_mix", "bar_shear", "cross_shear"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "bar_shear":
            if self.j is not None:
                raise ValueError("bar_shear takes a single level")
        else:
            if self.j is None or self.j == self.i:
                raise ValueError(f"{self.kind} needs two distinct levels")

    def substitution_pairs(self) -> list[tuple[int, int, object]]:
        """(target, source, coeff) triples: index target picks up coeff*source
        under Y -> g^T Y g."""
        i, j, mu = self.i, self.j, self.mu
        if self.kind == "bar_shear":
            return [(i, -i, mu)]
        if self.kind == "level_mix":
            return [(j, i, -mu), (-i, -j, mu)]
        return [(i, -j, mu), (j, -i, mu)]

    def matrix(self, n: int):
        r = n // 2
        g = identity(n)
        i, j, mu = self.i, self.j, self.mu

        def put(a_signed, b_signed, c):
            g[signed_to_position(a_signed, r) - 1][signed_to_position(b_signed, r) - 1] += c

        if self.kind == "bar_shear":
            put(-i, i, mu)
        elif self.kind == "level_mix":
            put(i, j, -mu)
            put(-j, -i, mu)
        else:
            put(-j, i, mu)
            put(-i, j, mu)
        return g


def apply_symplectic_generator(g: SympGenerator, b: PfBracket) -> list[tuple[object, PfBracket]]:
    """Expand the induced action of g on a bracket.

    Returns (coefficient, bracket) terms; coefficients carry the powers of mu.
    """
    if b.is_zero:
        return []
    targets = {t: (s, c) for t, s, c in g.substitution_pairs()}
    hit = [k for k, idx in enumerate(b.indices) if idx in targets]
    terms: dict[PfBracket, object] = {}

    def rec(k: int, current: list[int], coeff):
        if k == len(hit):
            nb = normalize_pf(current)
            if not nb.is_zero:
                sgn = nb.sign * b.sign
                key = PfBracket(1, nb.indices)
                nc = terms.get(key, 0) + sgn * coeff
                if nc:
                    terms[key] = nc
                else:
                    terms.pop(key, None)
            return
        pos = hit[k]
        rec(k + 1, current, coeff)
        src, c = targets[current[pos]]
        replaced = list(current)
        replaced[pos] = src
        rec(k + 1, replaced, coeff * c)

    rec(0, list(b.indices), 1)
    return [(c, br) for br, c in sorted(terms.items(), key=lambda kv: kv[0].indices)]
