"""Sparse multivariate polynomials in the entries of a generic skew matrix.

Variables are Y[i,j] for matrix positions 1 <= i < j <= n; skew-symmetry is
folded into the representation (Y[j,i] = -Y[i,j], Y[i,i] = 0).  Coefficients
are exact (ints or Fractions).  Term order is graded reverse-lexicographic
on variables ordered by (i, j).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]  # sorted by variable


def var_list(n: int) -> list[Var]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[Var, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def grevlex_key(mono: Monomial, n: int):
    """Sort key: ascending order of this key lists monomials in descending
    graded reverse-lexicographic order."""
    vs = var_list(n)
    pos = {v: k for k, v in enumerate(vs)}
    exps = [0] * len(vs)
    for v, e in mono:
        exps[pos[v]] = e
    return (-monomial_degree(mono), tuple(reversed(exps)))


def monomials_of_degree(n: int, m: int) -> list[Monomial]:
    """All degree-m monomials, in descending grevlex order."""
    vs = var_list(n)
    out = []
    for combo in combinations_with_replacement(vs, m):
        exps: dict[Var, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        out.append(tuple(sorted(exps.items())))
    out.sort(key=lambda mo: grevlex_key(mo, n))
    return out


class Poly:
    """A sparse polynomial attached to a matrix size n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Monomial, object] | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c) -> "Poly":
        return cls(n, {(): c}) if c else cls(n)

    @classmethod
    def variable(cls, n: int, i: int, j: int) -> "Poly":
        """Y[i,j] with skew-symmetry applied; zero when i == j."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"positions ({i},{j}) out of range for n={n}")
        if i == j:
            return cls(n)
        if i < j:
            return cls(n, {(((i, j), 1),): 1})
        return cls(n, {(((j, i), 1),): -1})

    def _check(self, other: "Poly"):
        if self.n != other.n:
            raise ValueError("polynomials over different matrix sizes")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            nc = out.get(mono, 0) + c
            if nc:
                out[mono] = nc
            else:
                out.pop(mono, None)
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.n, {m: c * other for m, c in self.terms.items()} if other else {})
        self._check(other)
        out: dict[Monomial, object] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = monomial_mul(ma, mb)
                nc = out.get(mono, 0) + ca * cb
                if nc:
                    out[mono] = nc
                else:
                    out.pop(mono, None)
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict[int, "Poly"]:
        comps: dict[int, dict] = {}
        for mono, c in self.terms.items():
            comps.setdefault(monomial_degree(mono), {})[mono] = c
        return {d: Poly(self.n, t) for d, t in sorted(comps.items())}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0], self.n))

    def evaluate(self, y):
        """Exact value at an n x n skew matrix given as lists of scalars."""
        if len(y) != self.n or any(len(row) != self.n for row in y):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        total = 0
        for mono, c in self.terms.items():
            val = c
            for (i, j), e in mono:
                val = val * y[i - 1][j - 1] ** e
            total = total + val
        return total

    def substitute(self, images: dict[Var, "Poly"]) -> "Poly":
        """Replace each variable by a polynomial."""
        out = Poly.zero(self.n)
        for mono, c in self.terms.items():
            term = Poly.const(self.n, c)
            for v, e in mono:
                img = images.get(v)
                if img is None:
                    img = Poly(self.n, {((v, 1),): 1})
                term = term * img ** e
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono, c in self.sorted_terms():
            if mono == ():
                bits.append(str(c))
                continue
            factors = "*".join(
                f"Y[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in mono
            )
            if c == 1:
                bits.append(factors)
            elif c == -1:
                bits.append(f"-{factors}")
            else:
                bits.append(f"{c}*{factors}")
        return " + ".join(bits).replace("+ -", "- ")


def conjugated_variable_images(g, n: int) -> dict[Var, Poly]:
    """Images of the variables under Y -> g^T Y g, as linear polynomials."""
    images: dict[Var, Poly] = {}
    for i, j in var_list(n):
        p = Poly.zero(n)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                c = g[a - 1][i - 1] * g[b - 1][j - 1] - g[b - 1][i - 1] * g[a - 1][j - 1]
                if c:
                    p = p + c * Poly.variable(n, a, b)
        images[(i, j)] = p
    return images


def substitute_conjugate(p: Poly, g) -> Poly:
    """The polynomial Y -> p(g^T Y g)."""
    return p.substitute(conjugated_variable_images(g, p.n))
