"""Straightening of pfaffian products onto tableau bases.

Two layers:

* the exchange-law straightening that rewrites any product of brackets as a
  combination of standard even-tableaux, an exact polynomial identity;
* the symplectic rewriting that further reduces standard even-tableaux onto
  the symplectic standard basis, valid modulo the defining ideal of the
  scheme.

A violating adjacent row pair is straightened by solving the small linear
system spanned by all instances of the quadratic exchange relation on the
pair's content.  Rewriting with one instance at a time can cycle between
mirror configurations, but the instance family always determines the
(unique) standard expansion, so solving it realizes the iteration in one
deterministic step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .indices import numeric_key, symp_key
from .linalg import SparseEchelon
from .pfaffians import pf_bracket_PQ, sort_parity, tableau_to_polynomial
from .poly import Poly
from .scalars import RationalField
from .tableaux import (
    Tableau,
    compare_type,
    is_standard,
    is_symplectic_standard,
    type_sort_key,
    type_tuple,
)

_KEYS = {"symp": symp_key, "numeric": numeric_key}


def _entry_key(order: str):
    try:
        return _KEYS[order]
    except KeyError:
        raise ValueError(f"unknown order {order!r}; expected 'symp' or 'numeric'") from None


def _row_sort_key(row, key):
    return (-len(row), tuple(key(x) for x in row))


def canonical_row(row, order: str = "symp") -> tuple[int, tuple[int, ...]]:
    """(sign, sorted row); sign 0 when an index repeats."""
    return sort_parity(tuple(row), _entry_key(order))


def canonicalize_rows(rows, order: str = "symp") -> tuple[int, Tableau | None]:
    """Sort each row with its sign and arrange rows into partition shape.

    Returns (0, None) when some row has a repeated index.
    """
    key = _entry_key(order)
    sign = 1
    canon = []
    for row in rows:
        if not row:
            continue  # an empty bracket is the unit factor
        s, sorted_row = canonical_row(row, order)
        if s == 0:
            return 0, None
        sign *= s
        canon.append(sorted_row)
    canon.sort(key=lambda rw: _row_sort_key(rw, key))
    return sign, Tableau(tuple(canon))


def _tab_order_key(t: Tableau):
    return (t.size, t.shape, tuple(symp_key(x) for row in t.rows for x in row))


class TabCombo:
    """Formal linear combination of even-tableaux with exact coefficients."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[Tableau, object] | None = None):
        self.r = r
        self.terms = {}
        if terms:
            for t, c in terms.items():
                if c:
                    self.terms[t] = c

    @classmethod
    def build(cls, r: int, items, order: str = "symp") -> "TabCombo":
        """Canonicalize (coefficient, tableau-or-rows) pairs into a combo."""
        terms: dict[Tableau, object] = {}
        for c, t in items:
            rows = t.rows if isinstance(t, Tableau) else tuple(tuple(x) for x in t)
            for row in rows:
                if len(row) % 2 != 0:
                    raise ValueError(f"odd-sized row {row} is not allowed")
            s, canon = canonicalize_rows(rows, order)
            if s == 0 or not c:
                continue
            canon.validate(r)
            nc = terms.get(canon, 0) + s * c
            if nc:
                terms[canon] = nc
            else:
                terms.pop(canon, None)
        return cls(r, terms)

    @classmethod
    def zero(cls, r: int) -> "TabCombo":
        return cls(r)

    @classmethod
    def unit(cls, r: int, c=1) -> "TabCombo":
        return cls(r, {Tableau(()): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TabCombo") -> "TabCombo":
        if self.r != other.r:
            raise ValueError("combos over different ranks")
        out = dict(self.terms)
        for t, c in other.terms.items():
            nc = out.get(t, 0) + c
            if nc:
                out[t] = nc
            else:
                out.pop(t, None)
        return TabCombo(self.r, out)

    def __sub__(self, other: "TabCombo") -> "TabCombo":
        return self + other.scale(-1)

    def scale(self, c) -> "TabCombo":
        if not c:
            return TabCombo(self.r)
        return TabCombo(self.r, {t: c * v for t, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TabCombo) and self.r == other.r and self.terms == other.terms
        )

    def __len__(self):
        return len(self.terms)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: _tab_order_key(kv[0]))

    def to_polynomial(self) -> Poly:
        n = 2 * self.r
        out = Poly.zero(n)
        for t, c in self.terms.items():
            out = out + c * tableau_to_polynomial(t, n)
        return out

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(Fraction(c)), "tableau": t.to_json()} for t, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, r: int, data) -> "TabCombo":
        items = [(Fraction(entry["coeff"]), Tableau.from_json(entry["tableau"])) for entry in data]
        return cls.build(r, items)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t}" for t, c in self.sorted_items()).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# exchange-law straightening


def _first_violation(rows, key) -> int | None:
    for l in range(len(rows) - 1):
        up, down = rows[l], rows[l + 1]
        for a, b in zip(up, down):
            if key(a) > key(b):
                return l
    return None


def _product_from_lists(lists, order: str):
    """Canonical product key from bracket index lists; None when zero."""
    sign = 1
    rows = []
    key = _entry_key(order)
    for lst in lists:
        if not lst:
            continue
        s, row = canonical_row(lst, order)
        if s == 0:
            return 0, None
        sign *= s
        rows.append(row)
    rows.sort(key=lambda rw: _row_sort_key(rw, key))
    return sign, tuple(rows)


def _product_is_standard(prod, key) -> bool:
    return _first_violation(prod, key) is None


def relation_instance(a_list, b_list, order: str = "symp") -> dict:
    """One instance of the quadratic exchange relation, as an identity
    sum(coeff * product) == 0 over canonical products."""
    if len(a_list) % 2 or len(b_list) % 2 or not a_list or not b_list:
        raise ValueError("both index lists must be nonempty of even length")
    eq: dict[tuple, object] = {}

    def add(coeff, lists):
        s, prod = _product_from_lists(lists, order)
        if prod is None:
            return
        nc = eq.get(prod, 0) + coeff * s
        if nc:
            eq[prod] = nc
        else:
            eq.pop(prod, None)

    a = tuple(a_list)
    b = tuple(b_list)
    b1, rest = b[0], b[1:]
    add(1, [a, b])
    for i in range(len(a)):
        add(-1, [a[:i] + (b1,) + a[i + 1 :], (a[i],) + rest])
    for jj in range(len(rest)):
        add(-((-1) ** (jj + 1)), [rest[:jj] + rest[jj + 1 :], (rest[jj], b1) + a])
    return eq


_PAIR_CACHE: dict = {}


def _pair_expansion(u, w, order: str):
    """Expand the product of two rows into standard products of the same
    content, by eliminating across all exchange-relation instances."""
    cache_key = (order, u, w)
    hit = _PAIR_CACHE.get(cache_key)
    if hit is not None:
        return hit
    key = _entry_key(order)
    sign, target = _product_from_lists([u, w], order)
    if target is None:
        _PAIR_CACHE[cache_key] = ()
        return ()
    if _product_is_standard(target, key):
        result = ((sign, target),)
        _PAIR_CACHE[cache_key] = result
        return result

    content = tuple(sorted(u + w, key=key))
    k = len(content)
    equations = []
    seen = set()
    for size_a in range(2, k - 1, 2):
        for positions in combinations(range(k), size_a):
            chosen = set(positions)
            a_list = tuple(content[i] for i in positions)
            b_multi = tuple(content[i] for i in range(k) if i not in chosen)
            for pi in range(len(b_multi)):
                b_list = (b_multi[pi],) + b_multi[:pi] + b_multi[pi + 1 :]
                inst = (a_list, b_list)
                if inst in seen:
                    continue
                seen.add(inst)
                eq = relation_instance(a_list, b_list, order)
                if eq:
                    equations.append(eq)

    products = sorted({p for eq in equations for p in eq} | {target})
    unknowns = [p for p in products if not _product_is_standard(p, key)]
    knowns = [p for p in products if _product_is_standard(p, key)]
    col = {p: i for i, p in enumerate(unknowns)}
    col.update({p: len(unknowns) + i for i, p in enumerate(knowns)})
    back = {i: p for p, i in col.items()}

    field = RationalField()
    ech = SparseEchelon(field)
    for eq in equations:
        ech.add_row({col[p]: field.of(c) for p, c in eq.items()})
    pivot = ech.pivot_rows.get(col[target])
    if pivot is None:
        raise RuntimeError(
            f"exchange relations failed to determine the product {target!r}"
        )
    result = []
    for c_idx, coeff in pivot.items():
        if c_idx == col[target]:
            continue
        prod = back[c_idx]
        if not _product_is_standard(prod, key):
            raise RuntimeError(
                f"straightening of {target!r} left a non-standard product {prod!r}"
            )
        val = -coeff * sign
        if val.denominator == 1:
            val = int(val)
        result.append((val, prod))
    result = tuple(sorted(result, key=lambda cp: cp[1]))
    _PAIR_CACHE[cache_key] = result
    return result


def exchange_straighten(combo: TabCombo, order: str = "symp", max_steps: int = 10**6) -> TabCombo:
    """Rewrite a combination so every tableau is standard, preserving the
    underlying polynomial exactly."""
    key = _entry_key(order)
    pending = dict(TabCombo.build(combo.r, [(c, t) for t, c in combo.terms.items()], order).terms)
    result: dict[Tableau, object] = {}
    steps = 0
    while pending:
        t = min(pending, key=_tab_order_key)
        c = pending.pop(t)
        if not c:
            continue
        l = _first_violation(t.rows, key)
        if l is None:
            nc = result.get(t, 0) + c
            if nc:
                result[t] = nc
            else:
                result.pop(t, None)
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError(
                f"straightening exceeded {max_steps} steps; stuck near {t}"
            )
        others = t.rows[:l] + t.rows[l + 2 :]
        for d, prows in _pair_expansion(t.rows[l], t.rows[l + 1], order):
            rows = tuple(sorted(others + prows, key=lambda rw: _row_sort_key(rw, key)))
            nt = Tableau(rows)
            nc = pending.get(nt, 0) + c * d
            if nc:
                pending[nt] = nc
            else:
                pending.pop(nt, None)
    return TabCombo(combo.r, result)


# ---------------------------------------------------------------------------
# symplectic rewriting


@dataclass(frozen=True)
class SympViolation:
    """Where and how a standard tableau breaks the column-confinement rule."""

    row: int  # 0-based row index
    col: int  # 1-based column of the violation
    gamma: frozenset
    a_set: frozenset
    p_rest: frozenset
    q_rest: frozenset


def find_symp_violation(t: Tableau, r: int) -> SympViolation | None:
    if not is_standard(t):
        raise ValueError("tableau is not standard")
    t.validate(r)
    max_len = len(t.rows[0]) if t.rows else 0
    for h in range(2, max_len + 1):
        for l, row in enumerate(t.rows):
            if len(row) < h or abs(row[h - 1]) >= h:
                continue
            prefix = row[:h]
            levels = {}
            for x in prefix:
                levels.setdefault(abs(x), set()).add(x > 0)
            gamma = frozenset(p for p, kinds in levels.items() if len(kinds) == 2)
            a_set = frozenset(p for p, kinds in levels.items() if len(kinds) == 1)
            if 2 * len(gamma) + len(a_set) != h or row[h - 2] != -(h - 1) or row[h - 1] != h - 1:
                raise RuntimeError(f"violation structure broke down at row {l}, column {h} of {t}")
            p_rest = frozenset(x for x in row if x > 0) - gamma
            q_rest = frozenset(-x for x in row if x < 0) - gamma
            return SympViolation(l, h, gamma, a_set, p_rest, q_rest)
    return None


def symp_relation_rhs(p_rest, q_rest, gamma, r: int) -> TabCombo:
    """The combination replacing a bracket whose shared levels are `gamma`:
    (-1)^|gamma| times the sum over fresh level sets of the same size."""
    p_rest, q_rest, gamma = set(p_rest), set(q_rest), set(gamma)
    if not gamma:
        raise ValueError("gamma must be nonempty")
    if gamma & (p_rest | q_rest):
        raise ValueError("gamma overlaps the fixed level sets")
    if (len(p_rest) + len(q_rest)) % 2 != 0:
        raise ValueError("|P'| + |Q'| must be even")
    for p in p_rest | q_rest | gamma:
        if not 1 <= p <= r:
            raise ValueError(f"level {p} out of range for r={r}")
    free = sorted(set(range(1, r + 1)) - p_rest - q_rest - gamma)
    sign_g = (-1) ** len(gamma)
    terms: dict[Tableau, object] = {}
    for gp in combinations(free, len(gamma)):
        br = pf_bracket_PQ(p_rest | set(gp), q_rest | set(gp))
        s_row, row = canonical_row(br.indices, "symp")
        tab = Tableau((row,))
        c = terms.get(tab, 0) + sign_g * br.sign * s_row
        if c:
            terms[tab] = c
        else:
            terms.pop(tab, None)
    return TabCombo(r, terms)


def symp_normal_form(combo: TabCombo, max_steps: int = 10**6) -> TabCombo:
    """Unique expansion in the symplectic standard even-tableau basis,
    modulo the defining ideal of the scheme."""
    r = combo.r
    work = exchange_straighten(combo)
    steps = 0
    while True:
        offenders = [t for t in work.terms if not is_symplectic_standard(t)]
        if not offenders:
            return work
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"symplectic rewriting exceeded {max_steps} steps")
        t = min(
            offenders,
            key=lambda tt: (type_sort_key(type_tuple(tt, r)), _tab_order_key(tt)),
        )
        c = work.terms[t]
        v = find_symp_violation(t, r)
        row = t.rows[v.row]
        s_row, _ = sort_parity(row, numeric_key)
        lhs = pf_bracket_PQ(v.p_rest | v.gamma, v.q_rest | v.gamma)
        rhs = symp_relation_rhs(v.p_rest, v.q_rest, v.gamma, r)
        old_type = type_tuple(t, r)
        replacement: dict[Tableau, object] = {}
        for w_tab, d in rhs.terms.items():
            rows = t.rows[: v.row] + (w_tab.rows[0],) + t.rows[v.row + 1 :]
            rows = tuple(sorted(rows, key=lambda rw: _row_sort_key(rw, symp_key)))
            nt = Tableau(rows)
            if compare_type(type_tuple(nt, r), old_type) <= 0:
                raise RuntimeError(
                    f"symplectic step failed to increase the type: {t} -> {nt}"
                )
            replacement[nt] = replacement.get(nt, 0) + c * s_row * lhs.sign * d
        new_terms = dict(work.terms)
        del new_terms[t]
        for nt, d in replacement.items():
            nc = new_terms.get(nt, 0) + d
            if nc:
                new_terms[nt] = nc
            else:
                new_terms.pop(nt, None)
        work = exchange_straighten(TabCombo(r, new_terms))


def multiply_basis(t1: Tableau, t2: Tableau, r: int) -> TabCombo:
    """Normal form of the product of two even-tableaux."""
    return symp_normal_form(TabCombo.build(r, [(1, Tableau(t1.rows + t2.rows))]))
