"""Strong inner inverses for endomaps of finite sets.

For an endomap x of a finite set S the eventual image EI = the
intersection of all x^n(S) is reached after at most |S| steps, and x
restricted to EI is a bijection onto EI.  In particular the condition

    x(EI) = EI

always holds on a finite set; it is exactly what is needed for a strong
inner inverse to exist, and the construction here produces one:

* on EI, y is the inverse of the bijection x|EI (this makes every EI
  element y-stable, more than the minimum required);
* on the rest of the image, y(s) is a preimage one depth level down,
  d(y(s)) = d(s) - 1, ties broken by least index;
* on depth-0 elements, the depth along the forward orbit must
  eventually jump above the step count (on a finite set it reaches EI),
  and for the least n with d(x^n(s)) > n the value is
  y(s) = y^(n+1)(x^n(s)) using the already constructed values.

The depth of s is the largest n with s in x^n(S), infinite exactly on
EI.  The remaining case of the general construction (orbits with
d(x^n(s)) = n forever) cannot occur on a finite set; hitting it raises.
"""

from dataclasses import dataclass
from math import inf

from .monoid import ParseError

__all__ = [
    "FiniteEndomap",
    "eventual_image",
    "depth_profile",
    "build_strong_inner_inverse",
    "RelationWitness",
    "verify_relations",
    "bigcap_condition",
    "weak_system_holds",
    "all_endomaps",
    "parse_endomap",
]


@dataclass(frozen=True, slots=True)
class FiniteEndomap:
    """Total map on {0, ..., N-1}, stored as the tuple of images."""

    target: tuple[int, ...]

    def __post_init__(self):
        n = len(self.target)
        for s, t in enumerate(self.target):
            if not isinstance(t, int) or not (0 <= t < n):
                raise ValueError(f"image of {s} is {t!r}, outside 0..{n - 1}")

    @property
    def size(self) -> int:
        return len(self.target)

    def __call__(self, s: int) -> int:
        return self.target[s]

    def compose(self, other: "FiniteEndomap") -> "FiniteEndomap":
        """self after other."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return FiniteEndomap(tuple(self.target[t] for t in other.target))

    def power(self, n: int) -> "FiniteEndomap":
        result = FiniteEndomap(tuple(range(self.size)))
        for _ in range(n):
            result = self.compose(result)
        return result

    def __str__(self):
        return ",".join(str(t) for t in self.target)


def parse_endomap(text: str) -> FiniteEndomap:
    """Parse a comma-separated image list like "1,0,0"; "" is the empty map."""
    stripped = text.strip()
    if not stripped:
        return FiniteEndomap(())
    values = []
    pos = 0
    for chunk in stripped.split(","):
        try:
            values.append(int(chunk.strip()))
        except ValueError:
            raise ParseError(f"bad entry {chunk.strip()!r} in map", pos) from None
        pos += len(chunk) + 1
    try:
        return FiniteEndomap(tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def eventual_image(x: FiniteEndomap) -> frozenset:
    """Intersection of all forward images; x is a bijection on it."""
    current = frozenset(range(x.size))
    while True:
        nxt = frozenset(x(s) for s in current)
        if nxt == current:
            return current
        current = nxt


def depth_profile(x: FiniteEndomap) -> list:
    """depth(s) = greatest n with s in x^n(S); math.inf on the eventual image."""
    depths = [0] * x.size
    current = set(range(x.size))
    level = 0
    while True:
        nxt = {x(s) for s in current}
        if nxt == current:
            break
        level += 1
        for s in nxt:
            depths[s] = level
        current = nxt
    for s in current:
        depths[s] = inf
    return depths


def bigcap_condition(x: FiniteEndomap) -> bool:
    """Does x map the eventual image onto itself?  Always true on finite sets."""
    ei = eventual_image(x)
    return frozenset(x(s) for s in ei) == ei


def build_strong_inner_inverse(x: FiniteEndomap) -> FiniteEndomap:
    n = x.size
    if n == 0:
        return FiniteEndomap(())
    depths = depth_profile(x)
    ei = eventual_image(x)
    y: list[int | None] = [None] * n

    # the restriction of x to the eventual image is a bijection; invert it
    if len({x(t) for t in ei}) != len(ei):
        raise RuntimeError("x is not injective on its eventual image")
    for t in sorted(ei):
        y[x(t)] = t

    # image elements of finite positive depth: least preimage one level down
    for s in range(n):
        if y[s] is not None or depths[s] == 0:
            continue
        want = depths[s] - 1
        for t in range(n):
            if x(t) == s and depths[t] == want:
                y[s] = t
                break
        else:
            raise RuntimeError(f"no preimage of {s} at depth {want}; depth profile is broken")

    # depth-0 elements: follow the orbit to the first depth jump
    for s in range(n):
        if y[s] is not None:
            continue
        jump = None
        v = s
        for steps in range(1, n + 2):
            v = x(v)
            if depths[v] > steps:
                jump = steps
                break
        if jump is None:
            # would need the constant-depth branch of the general
            # construction, which finite orbits cannot reach
            raise RuntimeError(f"depth never jumps along the orbit of {s}")
        for _ in range(jump + 1):
            t = y[v]
            if t is None:
                raise RuntimeError("walked onto an element without a y value")
            v = t
        y[s] = v

    return FiniteEndomap(tuple(y))  # type: ignore[arg-type]


@dataclass
class RelationWitness:
    family: int
    j: int
    point: int

    def __str__(self):
        return f"family {self.family}, j = {self.j}, point {self.point}"


def verify_relations(x: FiniteEndomap, y: FiniteEndomap, jmax: int) -> RelationWitness | None:
    """First failing defining relation, scanning j, then family, then points.

    Checks x y^j x^j = y^(j-1) x^j and y^j x^j y = y^j x^(j-1) pointwise;
    returns None if every instance holds.
    """
    if x.size != y.size:
        raise ValueError("size mismatch")
    for j in range(1, jmax + 1):
        xj = x.power(j)
        yj = y.power(j)
        lhs1 = x.compose(yj).compose(xj)
        rhs1 = y.power(j - 1).compose(xj)
        lhs2 = yj.compose(xj).compose(y)
        rhs2 = yj.compose(x.power(j - 1))
        for family, lhs, rhs in ((1, lhs1, rhs1), (2, lhs2, rhs2)):
            for point in range(x.size):
                if lhs(point) != rhs(point):
                    return RelationWitness(family, j, point)
    return None


def weak_system_holds(x: FiniteEndomap, y: FiniteEndomap, nmax: int) -> bool:
    """xyx = x together with x^(n-1) y^n x^n = y x^n for 1 <= n <= nmax."""
    if x.compose(y).compose(x).target != x.target:
        return False
    for n in range(1, nmax + 1):
        lhs = x.power(n - 1).compose(y.power(n)).compose(x.power(n))
        rhs = y.compose(x.power(n))
        if lhs.target != rhs.target:
            return False
    return True


def all_endomaps(size: int):
    """Every endomap of {0, ..., size-1}, in lexicographic order."""
    import itertools

    for target in itertools.product(range(size), repeat=size):
        yield FiniteEndomap(target)
