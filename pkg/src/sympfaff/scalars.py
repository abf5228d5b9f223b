"""Exact scalar fields: arbitrary-precision rationals and prime fields.

Prime fields are only admitted with p > r, matching the characteristic
hypothesis under which the tableau basis exists.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """Residue modulo a prime, with field arithmetic via operators."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime moduli")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        if isinstance(other, Fraction):
            return FpElement(self.p, other.numerator) / FpElement(self.p, other.denominator)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return FpElement(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o / self

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __pow__(self, e: int):
        return FpElement(self.p, pow(self.v, e, self.p))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        return isinstance(other, FpElement) and other.p == self.p and other.v == self.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class RationalField:
    """The rationals; elements are ints or fractions."""

    name = "q"
    char = 0

    def of(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into the rationals")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_str(self, s: str):
        return Fraction(s)

    def to_str(self, x) -> str:
        return str(Fraction(x))

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")


class PrimeField:
    """Integers modulo a prime p, admitted only when p > r."""

    def __init__(self, p: int, r: int | None = None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if r is not None and p <= r:
            raise ValueError(f"prime field needs p > r, got p={p}, r={r}")
        self.p = p
        self.char = p
        self.name = f"fp:{p}"

    def of(self, x):
        if isinstance(x, int):
            return FpElement(self.p, x)
        if isinstance(x, Fraction):
            return FpElement(self.p, x.numerator) / FpElement(self.p, x.denominator)
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("mixed prime moduli")
            return x
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    @property
    def zero(self):
        return FpElement(self.p, 0)

    @property
    def one(self):
        return FpElement(self.p, 1)

    def from_str(self, s: str):
        return self.of(Fraction(s))

    def to_str(self, x) -> str:
        return str(self.of(x).v)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


def parse_field(spec: str, r: int | None = None):
    """Parse a field spec: "q" for rationals, "fp:P" for a prime field."""
    spec = spec.strip().lower()
    if spec == "q":
        return RationalField()
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]), r)
    raise ValueError(f"unknown field spec {spec!r}; expected 'q' or 'fp:P'")


def scalar_to_str(x) -> str:
    if isinstance(x, FpElement):
        return str(x.v)
    return str(Fraction(x))


def scalar_from_str(s: str) -> Fraction:
    return Fraction(s)
