"""Exact arithmetic in the free inverse monoid on one generator.

The monoid is generated by an element x together with a generalized
inverse y, subject to the relation family

    x^i y^j x^k = y^(j-i) x^j y^(j-k)    for 0 <= i <= j, 0 <= k <= j.

Every element equals x^i y^j x^k for exactly one exponent triple with
i <= j and k <= j, and elements are stored as that triple.  Under this
convention x itself is (1, 1, 1) (because x = xyx) and y is (0, 1, 0).

Products are computed through the embedding h into the direct product
of two bicyclic monoids

    h : F -> <x,y | xy=1> x <x,y | yx=1>,   x |-> (x,x),  y |-> (y,y),

whose factors have normal forms y^a x^b and x^c y^d respectively.
Componentwise multiplication there is branch-free truncated-subtraction
arithmetic, and the triple is read back off the pair as
(i, j, k) = (c, a+c, b).  Pairs in the image of h satisfy a+c = b+d;
every product checks that equation, so an arithmetic bug would surface
immediately rather than silently.
"""

from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "BicyclicPair",
    "CanonicalMonomial",
    "ONE",
    "X",
    "Y",
    "ParseError",
    "from_exponents",
    "reduce_word",
    "parse_word",
    "parse_monomial",
    "enumerate_monomials",
]


class ParseError(ValueError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class BicyclicPair(NamedTuple):
    """Image of a monoid element under the bicyclic embedding.

    The left component is the element y^a x^b of <x,y | xy=1>, the
    right component the element x^c y^d of <x,y | yx=1>.
    """

    a: int
    b: int
    c: int
    d: int


def _mul_left(a: int, b: int, a2: int, b2: int) -> tuple[int, int]:
    # (y^a x^b)(y^a2 x^b2) in <x,y | xy=1>: the x^b and y^a2 blocks cancel
    return a + max(a2 - b, 0), b2 + max(b - a2, 0)


def _mul_right(c: int, d: int, c2: int, d2: int) -> tuple[int, int]:
    # (x^c y^d)(x^c2 y^d2) in <x,y | yx=1>: mirror of _mul_left
    return c + max(c2 - d, 0), d2 + max(d - c2, 0)


@dataclass(frozen=True, slots=True)
class CanonicalMonomial:
    """The element x^i y^j x^k with 0 <= i <= j and 0 <= k <= j."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        for name in ("i", "j", "k"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"exponent {name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"exponent {name} must be non-negative, got {value}")
        if self.i > self.j or self.k > self.j:
            raise ValueError(
                f"({self.i},{self.j},{self.k}) is not canonical "
                "(need i <= j and k <= j); use from_exponents to normalize"
            )

    def embed(self) -> BicyclicPair:
        """Image (y^(j-i) x^k, x^i y^(j-k)) under the bicyclic embedding."""
        return BicyclicPair(self.j - self.i, self.k, self.i, self.j - self.k)

    def __mul__(self, other: "CanonicalMonomial") -> "CanonicalMonomial":
        if not isinstance(other, CanonicalMonomial):
            return NotImplemented
        p = self.embed()
        q = other.embed()
        a, b = _mul_left(p.a, p.b, q.a, q.b)
        c, d = _mul_right(p.c, p.d, q.c, q.d)
        if a + c != b + d:
            # the image of the embedding is closed under products, so this
            # can only mean the arithmetic above is broken
            raise RuntimeError(f"bicyclic consistency check failed for {self} * {other}")
        return CanonicalMonomial(c, a + c, b)

    def star(self) -> "CanonicalMonomial":
        """The involution: reverse the word and swap x with y."""
        return CanonicalMonomial(self.j - self.k, self.j, self.j - self.i)

    def is_idempotent(self) -> bool:
        return self * self == self

    def degree(self) -> int:
        """Image under the homomorphism to the integers, x -> 1, y -> -1."""
        return self.i + self.k - self.j

    def word(self) -> str:
        """The defining word x^i y^j x^k, spelled out letter by letter."""
        return "x" * self.i + "y" * self.j + "x" * self.k

    def length(self) -> int:
        return self.i + self.j + self.k

    def min_length(self) -> int:
        """Length of a shortest word for this element.

        Minimal words have one of the two spellings x^i y^j x^k or
        y^(j-i) x^j y^(j-k); whichever is shorter wins (x itself has
        canonical triple (1,1,1) but minimal word "x").
        """
        return min(self.i + self.j + self.k, 3 * self.j - self.i - self.k)

    def sort_key(self) -> tuple[int, int, int]:
        """Display order for algebra elements: lexicographic on (j, i, k)."""
        return (self.j, self.i, self.k)

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


ONE = CanonicalMonomial(0, 0, 0)
X = CanonicalMonomial(1, 1, 1)
Y = CanonicalMonomial(0, 1, 0)


def parse_word(text: str) -> str:
    """Normalize a word over {x, y}: case-insensitive, whitespace ignored."""
    letters = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        low = ch.lower()
        if low in ("x", "y"):
            letters.append(low)
        else:
            raise ParseError(f"unexpected character {ch!r} in word", pos)
    return "".join(letters)


def reduce_word(text: str) -> CanonicalMonomial:
    """Canonical form of an arbitrary word over {x, y}.

    Folds monoid multiplication over the letters; the result's word
    length i+j+k never exceeds the input length.
    """
    result = ONE
    for ch in parse_word(text):
        result = result * (X if ch == "x" else Y)
    return result


def from_exponents(i: int, j: int, k: int) -> CanonicalMonomial:
    """Monomial x^i y^j x^k, normalized if the triple is out of range."""
    for name, value in (("i", i), ("j", j), ("k", k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"exponent {name} must be an int, got {value!r}")
        if value < 0:
            raise ValueError(f"exponent {name} must be non-negative, got {value}")
    if i <= j and k <= j:
        return CanonicalMonomial(i, j, k)
    return reduce_word("x" * i + "y" * j + "x" * k)


def _expect(text: str, pos: int, ch: str) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos >= len(text) or text[pos] != ch:
        found = repr(text[pos]) if pos < len(text) else "end of input"
        raise ParseError(f"expected {ch!r}, found {found}", pos)
    return pos + 1


def _parse_nonneg_int(text: str, pos: int) -> tuple[int, int]:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        found = repr(text[pos]) if pos < len(text) else "end of input"
        raise ParseError(f"expected a non-negative integer, found {found}", pos)
    return int(text[start:pos]), pos


def parse_triple(text: str, pos: int = 0) -> tuple[tuple[int, int, int], int]:
    """Parse "(i,j,k)" starting at pos; returns the exponents and the next position."""
    pos = _expect(text, pos, "(")
    i, pos = _parse_nonneg_int(text, pos)
    pos = _expect(text, pos, ",")
    j, pos = _parse_nonneg_int(text, pos)
    pos = _expect(text, pos, ",")
    k, pos = _parse_nonneg_int(text, pos)
    pos = _expect(text, pos, ")")
    return (i, j, k), pos


def parse_monomial(text: str) -> CanonicalMonomial:
    """Parse "(i,j,k)"; out-of-range triples are normalized."""
    (i, j, k), pos = parse_triple(text, 0)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ParseError(f"trailing input {text[pos:]!r}", pos)
    return from_exponents(i, j, k)


def enumerate_monomials(
    max_j: int | None = None, max_length: int | None = None
) -> Iterator[CanonicalMonomial]:
    """All canonical monomials with j <= max_j and/or i+j+k <= max_length."""
    if max_j is None and max_length is None:
        raise ValueError("at least one bound is required")
    j_bound = max_j if max_j is not None else max_length
    if max_length is not None and max_length < j_bound:
        j_bound = max_length
    for j in range(j_bound + 1):
        for i in range(j + 1):
            for k in range(j + 1):
                if max_length is not None and i + j + k > max_length:
                    continue
                yield CanonicalMonomial(i, j, k)
