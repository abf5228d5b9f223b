"""Index alphabet, its two total orders, and even partition shapes.

The alphabet for a configured rank r is {1,...,r, 1bar,...,rbar}.  A barred
index ibar is encoded externally as the signed integer -i, and is identified
with the matrix position r + i.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Index:
    """One symbol of the alphabet: a level in 1..r, barred or not."""

    level: int
    barred: bool = False

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"index level must be >= 1, got {self.level}")

    @classmethod
    def from_signed(cls, s: int) -> "Index":
        if s == 0:
            raise ValueError("0 is not a valid signed index")
        return cls(abs(s), s < 0)

    @classmethod
    def from_position(cls, pos: int, r: int) -> "Index":
        if not 1 <= pos <= 2 * r:
            raise ValueError(f"position {pos} out of range for r={r}")
        return cls(pos, False) if pos <= r else cls(pos - r, True)

    @property
    def signed(self) -> int:
        return -self.level if self.barred else self.level

    def position(self, r: int) -> int:
        """Matrix row/column position: ibar sits at r + i."""
        self.validate(r)
        return self.level + r if self.barred else self.level

    def validate(self, r: int) -> None:
        if self.level > r:
            raise ValueError(f"index level {self.level} exceeds r={r}")

    def __str__(self):
        return f"{self.level}~" if self.barred else str(self.level)


def signed_to_position(s: int, r: int) -> int:
    """Signed encoding -> matrix position in 1..2r."""
    lv = abs(s)
    if s == 0 or lv > r:
        raise ValueError(f"signed index {s} invalid for r={r}")
    return lv + r if s < 0 else lv


def position_to_signed(pos: int, r: int) -> int:
    if not 1 <= pos <= 2 * r:
        raise ValueError(f"position {pos} out of range for r={r}")
    return pos if pos <= r else -(pos - r)


def symp_key(s: int) -> tuple[int, int]:
    """Sort key for the tableau order: 1bar < 1 < 2bar < 2 < ...

    Works on signed encodings and needs no rank context.
    """
    return (abs(s), 0 if s < 0 else 1)


def numeric_key(s: int) -> tuple[int, int]:
    """Sort key for the position order: 1 < ... < r < 1bar < ... < rbar."""
    return (1 if s < 0 else 0, abs(s))


def _cmp(ka, kb) -> int:
    return (ka > kb) - (ka < kb)


def compare_symp(a: Index | int, b: Index | int) -> int:
    """-1/0/+1 under the tableau order (ibar immediately before i)."""
    sa = a.signed if isinstance(a, Index) else a
    sb = b.signed if isinstance(b, Index) else b
    return _cmp(symp_key(sa), symp_key(sb))


def compare_numeric(a: Index | int, b: Index | int) -> int:
    """-1/0/+1 under the matrix-position order."""
    sa = a.signed if isinstance(a, Index) else a
    sb = b.signed if isinstance(b, Index) else b
    return _cmp(numeric_key(sa), numeric_key(sb))


def all_signed(r: int) -> list[int]:
    """All 2r signed indices in numeric order."""
    return list(range(1, r + 1)) + [-i for i in range(1, r + 1)]


Shape = tuple[int, ...]


def validate_shape(parts) -> Shape:
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p <= 0:
            raise ValueError(f"shape parts must be positive, got {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"shape parts must weakly decrease, got {parts}")
    return parts


def is_even_shape(parts) -> bool:
    return all(p % 2 == 0 for p in parts)


def enumerate_even_shapes(total: int, max_part: int) -> list[Shape]:
    """All partitions of `total` with every part even and <= max_part.

    Deterministic lex-descending order; total must be even.
    """
    if total < 0 or total % 2 != 0:
        raise ValueError(f"total must be a nonnegative even integer, got {total}")
    cap = max_part if max_part % 2 == 0 else max_part - 1
    out: list[Shape] = []

    def rec(remaining: int, bound: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        p = min(bound, remaining)
        if p % 2 == 1:
            p -= 1
        while p >= 2:
            rec(remaining - p, p, prefix + (p,))
            p -= 2

    rec(total, cap, ())
    return out
