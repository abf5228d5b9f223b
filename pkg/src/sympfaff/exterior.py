"""Exterior algebra of the 2r-dimensional module with its symplectic form,
and the contraction operators that pair off wedge factors.

Basis monomials are stored as position tuples sorted ascending, with the
reordering sign folded into the coefficient.
"""

from __future__ import annotations

from itertools import combinations

from .indices import signed_to_position
from .pfaffians import _perm_sign, pq_index_list


class ExtVector:
    """Sparse element of the exterior algebra over positions 1..n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], object] | None = None):
        self.n = n
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def zero(cls, n: int) -> "ExtVector":
        return cls(n)

    @classmethod
    def scalar(cls, n: int, c) -> "ExtVector":
        return cls(n, {(): c}) if c else cls(n)

    @classmethod
    def basis(cls, n: int, positions) -> "ExtVector":
        """e_{p1} ^ e_{p2} ^ ... for a list of positions, sign-normalized."""
        seq = tuple(positions)
        if any(not 1 <= p <= n for p in seq):
            raise ValueError(f"positions {seq} out of range for n={n}")
        if len(set(seq)) != len(seq):
            return cls.zero(n)
        order = tuple(sorted(seq))
        sgn = _perm_sign([order.index(p) for p in seq])
        return cls(n, {order: sgn})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("vectors over different ranks")

    def __add__(self, other):
        if isinstance(other, (int,)) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            nc = out.get(key, 0) + c
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
        return ExtVector(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return ExtVector(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not c:
            return ExtVector.zero(self.n)
        return ExtVector(self.n, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ExtVector) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            mono = "^".join(f"e{p}" for p in key) if key else "1"
            bits.append(f"{self.terms[key]}*{mono}")
        return " + ".join(bits)


def form(a: int, b: int) -> int:
    """The symplectic pairing on signed indices: <i, jbar> = delta_ij."""
    if a > 0 and b < 0:
        return 1 if a == -b else 0
    if a < 0 and b > 0:
        return -1 if a == -b else 0
    return 0


def form_positions(pa: int, pb: int, r: int) -> int:
    if pa <= r < pb and pb == pa + r:
        return 1
    if pb <= r < pa and pa == pb + r:
        return -1
    return 0


def wedge(u: ExtVector, v: ExtVector) -> ExtVector:
    u._check(v)
    out: dict[tuple[int, ...], object] = {}
    for ka, ca in u.terms.items():
        for kb, cb in v.terms.items():
            if set(ka) & set(kb):
                continue
            merged = ka + kb
            order = tuple(sorted(merged))
            sgn = _perm_sign([order.index(p) for p in merged])
            c = out.get(order, 0) + sgn * ca * cb
            if c:
                out[order] = c
            else:
                out.pop(order, None)
    return ExtVector(u.n, out)


def wedge_power(v: ExtVector, m: int) -> ExtVector:
    out = ExtVector.scalar(v.n, 1)
    for _ in range(m):
        out = wedge(out, v)
    return out


def e_PQ(p_set, q_set, r: int) -> ExtVector:
    """The basis vector attached to subsets P, Q of {1..r}, resorted."""
    seq = pq_index_list(p_set, q_set)
    return ExtVector.basis(2 * r, [signed_to_position(s, r) for s in seq])


def phi(v: ExtVector, t: int) -> ExtVector:
    """Contract t wedge pairs through the form, by the defining signed sum
    over restricted permutations."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return v
    n = v.n
    r = n // 2
    degs = v.degrees()
    if any(k < 2 * t for k in degs):
        raise ValueError(f"cannot contract {t} pairs out of degree {min(degs)}")
    out = ExtVector.zero(n)
    for key, coeff in v.terms.items():
        k = len(key)
        for ordered_pairs, rest in _pair_sequences(k, t):
            val = coeff
            for a, b in ordered_pairs:
                f = form_positions(key[a], key[b], r)
                if not f:
                    val = 0
                    break
                val = val * f
            if not val:
                continue
            flat = [i for ab in ordered_pairs for i in ab] + list(rest)
            sgn = _perm_sign(flat)
            remaining = tuple(key[i] for i in rest)
            c = out.terms.get(remaining, 0) + sgn * val
            if c:
                out.terms[remaining] = c
            else:
                out.terms.pop(remaining, None)
    return out


def _pair_sequences(k: int, t: int):
    """Ordered sequences of t disjoint increasing index pairs from range(k),
    with the leftover indices ascending."""

    def rec(available: tuple[int, ...], depth: int, chosen: tuple):
        if depth == t:
            yield chosen, available
            return
        for a, b in combinations(range(len(available)), 2):
            pair = (available[a], available[b])
            rest = tuple(x for i, x in enumerate(available) if i not in (a, b))
            yield from rec(rest, depth + 1, chosen + (pair,))

    yield from rec(tuple(range(k)), 0, ())


def w_vector(y) -> ExtVector:
    """The degree-2 vector sum Y_ij e_i ^ e_j over all ordered pairs, i.e.
    coefficient 2*Y_ij on each ascending pair."""
    n = len(y)
    out: dict[tuple[int, ...], object] = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = 2 * y[i][j]
            if c:
                out[(i + 1, j + 1)] = c
    return ExtVector(n, out)


def check_contraction_vanishing(y, m: int, t: int, require_point: bool = False) -> bool:
    """True iff contracting t pairs out of the m-th wedge power of w(Y)
    gives exactly zero."""
    if not 1 <= t <= m <= len(y) // 2:
        raise ValueError("need 1 <= t <= m <= r")
    if require_point:
        from .oracle import point_violations

        bad = point_violations(y)
        if bad:
            raise ValueError("not a point of the scheme: " + "; ".join(bad))
    wm = wedge_power(w_vector(y), m)
    return not phi(wm, t)
