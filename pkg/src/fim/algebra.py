"""Exact arithmetic in the monoid algebra of the one-generator free
inverse monoid over an exact field.

An element is a finitely supported linear combination of canonical
monomials, stored as a mapping monomial -> nonzero scalar.  On top of
the ring operations the module provides the distinguished elements the
algebra is usually analyzed with:

* the projection idempotents  l_i = x^(i-1) y^(i-1) - x^i y^i  and
  r_i = y^(i-1) x^(i-1) - y^i x^i  (so xy = 1 - l_1 and yx = 1 - r_1);
* the central idempotents  p_n = r_n l_1 + r_(n-1) l_2 + ... + r_1 l_n;
* the grading by letter count (x -> +1, y -> -1) via ``degree_split``;
* the twisted inner inverse  y' = y + x^(m-1) l_1 r_m, which acts like
  y in all products (y')^i x^i and x^i (y')^i yet is not a strong inner
  inverse to x.

Elements print as, and parse from, expressions like
``"3/2*(1,2,2) - (0,0,0)"``; terms are ordered by (j, i, k), a
display-only choice.
"""

from fractions import Fraction

from .monoid import ONE, X, Y, CanonicalMonomial, ParseError, parse_triple, from_exponents

__all__ = [
    "AlgebraElement",
    "zero",
    "one",
    "monomial",
    "gen_x",
    "gen_y",
    "xpow",
    "ypow",
    "ell",
    "rr",
    "p_n",
    "degree_split",
    "y_prime",
    "parse_element",
]


class AlgebraElement:
    """Finitely supported map from canonical monomials to nonzero scalars.

    Values are immutable by convention: every operation returns a fresh
    element and nothing mutates ``terms`` after construction.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict):
        self.field = field
        self.terms = terms

    @classmethod
    def from_items(cls, field, items) -> "AlgebraElement":
        acc: dict = {}
        for mono, coeff in items:
            if not coeff:
                continue
            new = acc.get(mono, field.zero) + coeff
            if new:
                acc[mono] = new
            elif mono in acc:
                del acc[mono]
        return cls(field, acc)

    def _check_companion(self, other: "AlgebraElement"):
        if self.field != other.field:
            raise ValueError(f"mixed fields {self.field!r} and {other.field!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: CanonicalMonomial):
        return self.terms.get(mono, self.field.zero)

    def support(self) -> list[CanonicalMonomial]:
        return sorted(self.terms, key=CanonicalMonomial.sort_key)

    def max_j(self) -> int:
        """Largest middle exponent in the support (0 for the zero element)."""
        return max((m.j for m in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_companion(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = acc.get(mono, self.field.zero) + coeff
            if new:
                acc[mono] = new
            elif mono in acc:
                del acc[mono]
        return AlgebraElement(self.field, acc)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.field, {m: -c for m, c in self.terms.items()})

    def scale(self, coeff) -> "AlgebraElement":
        if not coeff:
            return AlgebraElement(self.field, {})
        return AlgebraElement(self.field, {m: coeff * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_companion(other)
        acc: dict = {}
        zero = self.field.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                new = acc.get(mono, zero) + c1 * c2
                if new:
                    acc[mono] = new
                elif mono in acc:
                    del acc[mono]
        return AlgebraElement(self.field, acc)

    def __rmul__(self, coeff):
        # scalar * element; the scalar may be an int or a field scalar
        if isinstance(coeff, AlgebraElement):
            return NotImplemented
        if isinstance(coeff, int):
            coeff = self.field.from_int(coeff)
        return self.scale(coeff)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative power in the monoid algebra")
        result = one(self.field)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in self.support():
            coeff = self.terms[mono]
            negative = isinstance(coeff, Fraction) and coeff < 0
            mag = -coeff if negative else coeff
            body = f"{mono}" if mag == self.field.one else f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self} over {self.field!r}>"


def zero(field) -> AlgebraElement:
    return AlgebraElement(field, {})


def one(field) -> AlgebraElement:
    return AlgebraElement(field, {ONE: field.one})


def monomial(field, mono: CanonicalMonomial, coeff=None) -> AlgebraElement:
    if coeff is None:
        coeff = field.one
    return AlgebraElement(field, {mono: coeff} if coeff else {})


def gen_x(field) -> AlgebraElement:
    return monomial(field, X)


def gen_y(field) -> AlgebraElement:
    return monomial(field, Y)


def xpow(field, n: int) -> AlgebraElement:
    return monomial(field, from_exponents(n, n, n)) if n else one(field)


def ypow(field, n: int) -> AlgebraElement:
    return monomial(field, from_exponents(0, n, 0)) if n else one(field)


def ell(field, i: int) -> AlgebraElement:
    """The idempotent x^(i-1) y^(i-1) - x^i y^i, projecting to the i-th
    basis slot from the left of each block under the standard action."""
    if i < 1:
        raise ValueError(f"l_{i} is not defined; indices start at 1")
    return AlgebraElement.from_items(
        field,
        [
            (CanonicalMonomial(i - 1, i - 1, 0), field.one),
            (CanonicalMonomial(i, i, 0), -field.one),
        ],
    )


def rr(field, i: int) -> AlgebraElement:
    """The idempotent y^(i-1) x^(i-1) - y^i x^i, the mirror of ell."""
    if i < 1:
        raise ValueError(f"r_{i} is not defined; indices start at 1")
    return AlgebraElement.from_items(
        field,
        [
            (CanonicalMonomial(0, i - 1, i - 1), field.one),
            (CanonicalMonomial(0, i, i), -field.one),
        ],
    )


def p_n(field, n: int) -> AlgebraElement:
    """Central idempotent r_n l_1 + r_(n-1) l_2 + ... + r_1 l_n."""
    if n < 1:
        raise ValueError(f"p_{n} is not defined; indices start at 1")
    total = zero(field)
    for i in range(1, n + 1):
        total = total + rr(field, n + 1 - i) * ell(field, i)
    return total


def degree_split(a: AlgebraElement) -> dict[int, AlgebraElement]:
    """Split by the grading x -> +1, y -> -1; the parts sum back to a."""
    parts: dict[int, dict] = {}
    for mono, coeff in a.terms.items():
        parts.setdefault(mono.degree(), {})[mono] = coeff
    return {d: AlgebraElement(a.field, terms) for d, terms in parts.items()}


def y_prime(field, m: int) -> AlgebraElement:
    """The inner inverse y + x^(m-1) l_1 r_m of x.

    It satisfies (y')^i x^i = y^i x^i and x^i (y')^i = x^i y^i for all i,
    but is not a strong inner inverse: y' != y' x y'.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return gen_y(field) + xpow(field, m - 1) * ell(field, 1) * rr(field, m)


def _parse_scalar_token(text: str, pos: int, field):
    start = pos
    while pos < len(text) and (text[pos].isdigit() or text[pos] == "/"):
        pos += 1
    if pos == start:
        found = repr(text[pos]) if pos < len(text) else "end of input"
        raise ParseError(f"expected a coefficient or '(', found {found}", pos)
    token = text[start:pos]
    try:
        return field.parse(token), pos
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {token!r}", start) from None


def parse_element(text: str, field) -> AlgebraElement:
    """Parse expressions like "3/2*(1,2,2) - (0,0,0)".

    A term is ``coeff*(i,j,k)``, a bare ``(i,j,k)``, or a bare
    coefficient (meaning a multiple of the identity).  Out-of-range
    triples are normalized.
    """
    items = []
    pos = 0
    n = len(text)

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            if first and text[pos] == "+":
                pass
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        first = False
        if pos < n and text[pos] == "(":
            coeff = field.one
            (i, j, k), pos = parse_triple(text, pos)
            items.append((from_exponents(i, j, k), -coeff if sign < 0 else coeff))
        else:
            coeff, pos = _parse_scalar_token(text, pos, field)
            pos = skip_ws(pos)
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
                (i, j, k), pos = parse_triple(text, pos)
                items.append((from_exponents(i, j, k), -coeff if sign < 0 else coeff))
            else:
                items.append((ONE, -coeff if sign < 0 else coeff))
        pos = skip_ws(pos)
    return AlgebraElement.from_items(field, items)
