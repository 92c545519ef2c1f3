"""Exact scalar fields: arbitrary-precision rationals and prime fields.

A field object supplies ``zero``, ``one``, ``from_int``, ``parse`` and a
``name`` ("q" or "fp:<p>").  Rational scalars are ``fractions.Fraction``
values; prime-field scalars are ``ModInt`` residues.  Both kinds support
the ordinary arithmetic operators, truthiness (nonzero), equality and
hashing, which is all the rest of the package relies on.
"""

from fractions import Fraction

__all__ = ["QQ", "PrimeField", "ModInt", "RationalField", "field_from_name", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModInt:
    """Residue modulo a prime; arithmetic partners must share the modulus."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _value_of(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise TypeError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        return None

    def __add__(self, other):
        w = self._value_of(other)
        return NotImplemented if w is None else ModInt(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._value_of(other)
        return NotImplemented if w is None else ModInt(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._value_of(other)
        return NotImplemented if w is None else ModInt(w - self.v, self.p)

    def __mul__(self, other):
        w = self._value_of(other)
        return NotImplemented if w is None else ModInt(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._value_of(other)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError(f"division by zero in field of {self.p} elements")
        return ModInt(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._value_of(other)
        if w is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in field of {self.p} elements")
        return ModInt(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pow__(self, n: int):
        if self.v == 0 and n < 0:
            raise ZeroDivisionError(f"division by zero in field of {self.p} elements")
        return ModInt(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        return NotImplemented

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class RationalField:
    """The rationals; scalars are Fractions in lowest terms."""

    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def parse(text: str) -> Fraction:
        return Fraction(text)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Integers modulo p for a prime p; primality is checked up front."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.zero = ModInt(0, p)
        self.one = ModInt(1, p)

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    def from_int(self, n: int) -> ModInt:
        return ModInt(n, self.p)

    def parse(self, text: str) -> ModInt:
        return ModInt(int(text), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def field_from_name(name: str):
    """Resolve a field flag: "q" for the rationals, "fp:<p>" for a prime field."""
    text = name.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad prime field spec {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'fp:<p>')")
