"""Tableaux over the barred alphabet and their combinatorics.

Entries are signed ints (-i encodes ibar).  A tableau is an arbitrary
filling of a partition diagram; the predicates below single out the
standard / symplectic standard / canonical ones.  Enumeration is restricted
to even shapes, whose tableaux index the graded basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .indices import Shape, enumerate_even_shapes, symp_key, validate_shape


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows))
        for row in self.rows:
            for x in row:
                if x == 0:
                    raise ValueError("0 is not a valid entry")

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_even(self) -> bool:
        return all(len(row) % 2 == 0 for row in self.rows)

    def validate(self, r: int) -> None:
        if self.rows:
            validate_shape(self.shape)
        for row in self.rows:
            for x in row:
                if abs(x) > r:
                    raise ValueError(f"entry {x} out of range for r={r}")

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "Tableau":
        return cls(tuple(tuple(row) for row in data))

    def __str__(self):
        if not self.rows:
            return "(empty)"
        return " / ".join(
            "(" + ",".join(str(x) if x > 0 else f"{-x}~" for x in row) + ")" for row in self.rows
        )


EMPTY_TABLEAU = Tableau(())


def is_standard(t: Tableau) -> bool:
    """Rows strictly increase, columns weakly increase, in the barred order."""
    for row in t.rows:
        for a, b in zip(row, row[1:]):
            if symp_key(a) >= symp_key(b):
                return False
    for up, down in zip(t.rows, t.rows[1:]):
        if len(down) > len(up):
            return False
        for a, b in zip(up, down):
            if symp_key(a) > symp_key(b):
                return False
    return True


def is_symplectic_standard(t: Tableau) -> bool:
    """Standard, with level p confined to the first p columns."""
    if not is_standard(t):
        return False
    for row in t.rows:
        for col, x in enumerate(row, start=1):
            if abs(x) < col:
                return False
    return True


def is_canonical(t: Tableau) -> bool:
    """Column j holds only jbar."""
    return all(x == -col for row in t.rows for col, x in enumerate(row, start=1))


def type_tuple(t: Tableau, r: int) -> tuple[int, ...]:
    """(a1, b1, ..., ar, br): multiplicities of pbar and p."""
    t.validate(r)
    counts = [0] * (2 * r)
    for row in t.rows:
        for x in row:
            lv = abs(x)
            counts[2 * lv - 2 + (0 if x < 0 else 1)] += 1
    return tuple(counts)


def type_sort_key(tt: tuple[int, ...]) -> tuple[int, ...]:
    """Key whose natural order realizes the type order: lexicographic on
    (br, ar, ..., b1, a1)."""
    return tuple(reversed(tt))


def compare_type(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    if len(u) != len(v):
        raise ValueError("type tuples of different ranks")
    ku, kv = type_sort_key(u), type_sort_key(v)
    return (ku > kv) - (ku < kv)


def enumerate_symplectic_standard_even(shape, r: int) -> list[Tableau]:
    """All symplectic standard tableaux of an even shape, in lex order of
    their row-major words."""
    shape = validate_shape(shape)
    if any(p % 2 for p in shape):
        raise ValueError(f"shape {shape} has an odd row")
    if shape and shape[0] > r:
        return []
    alphabet = sorted(
        [s for i in range(1, r + 1) for s in (-i, i)], key=symp_key
    )
    cells = [(s, t) for s, length in enumerate(shape) for t in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Tableau] = []

    def rec(k: int):
        if k == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        s, t = cells[k]
        for x in alphabet:
            if abs(x) < t + 1:
                continue  # level too small for this column
            if t > 0 and symp_key(x) <= symp_key(grid[s][t - 1]):
                continue
            if s > 0 and symp_key(x) < symp_key(grid[s - 1][t]):
                continue
            grid[s][t] = x
            rec(k + 1)
        grid[s][t] = 0

    rec(0)
    return out


def count_symplectic_standard_even(m: int, r: int) -> int:
    """Number of symplectic standard even-tableaux with 2m cells."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for shape in enumerate_even_shapes(2 * m, min(r, 2 * m) if m else 0):
        total += len(enumerate_symplectic_standard_even(shape, r))
    return total
