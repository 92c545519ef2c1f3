"""Brute-force word oracle for the one-generator free inverse monoid.

Partitions all words over {x, y} up to a length bound in two
independent ways:

* ``classes_by_embedding`` folds each word letter by letter through the
  pair of bicyclic monoids <x,y | xy=1> and <x,y | yx=1>; two words
  share a class iff the folded normal-form pairs agree.  This never
  touches the triple arithmetic in ``monoid``, so the two routes check
  each other.

* ``classes_by_rewriting`` closes one of three explicit relation
  families under substitution inside a padded word universe, using a
  union-find.  The families are

      FEW1:  x y^j x^j = y^(j-1) x^j      and  y^j x^j y = y^j x^(j-1)
      FEW2:  x^j y^j x = x^j y^(j-1)      and  y x^j y^j = x^(j-1) y^j
      MANY:  x^i y^j x^k = y^(j-i) x^j y^(j-k)   (0 <= i,k <= j)

Substitution can lengthen a word before later steps shrink it again, so
the closure works inside the universe of words of length <= bound+slack
and the resulting partition is then restricted to the requested bound.
MANY connects the two normal forms of an element directly and slack 2
suffices for it, but the FEW families route one form through the other
(for x^i y^j x^k the connecting word x^i y^j x^j y^(j-k) is up to
2(j-k) letters longer), so their default slack is 6 -- enough for every
bound up to the configured maximum.  ``compare`` certifies per run that
all three rewriting partitions coincide with the embedding partition,
which is what makes the chosen slack trustworthy.
"""

import itertools
from dataclasses import dataclass

from .monoid import enumerate_monomials

__all__ = [
    "FEW1",
    "FEW2",
    "MANY",
    "FAMILIES",
    "CongruenceTable",
    "CompareReport",
    "all_words",
    "fold_bicyclic",
    "relation_pairs",
    "classes_by_embedding",
    "classes_by_rewriting",
    "compare",
    "count_canonical_triples",
    "count_representable",
]

FEW1 = "few1"
FEW2 = "few2"
MANY = "many"
FAMILIES = (FEW1, FEW2, MANY)

DEFAULT_MAX_LENGTH = 10
DEFAULT_SLACK = {FEW1: 6, FEW2: 6, MANY: 2}


def all_words(max_len: int) -> list[str]:
    """Every word of length <= max_len, ordered by length then lexicographically."""
    words = [""]
    for n in range(1, max_len + 1):
        words.extend("".join(p) for p in itertools.product("xy", repeat=n))
    return words


def fold_bicyclic(word: str) -> tuple[int, int, int, int]:
    """Normal forms (y^a x^b, x^c y^d) of a word in the two bicyclic monoids."""
    a = b = 0  # left factor, relation xy = 1
    c = d = 0  # right factor, relation yx = 1
    for ch in word:
        if ch == "x":
            b += 1
            if d > 0:
                d -= 1
            else:
                c += 1
        else:
            if b > 0:
                b -= 1
            else:
                a += 1
            d += 1
    return (a, b, c, d)


def count_canonical_triples(max_length: int) -> int:
    """#{(i,j,k) : i <= j, k <= j, i+j+k <= max_length}, by enumeration."""
    return sum(1 for _ in enumerate_monomials(max_length=max_length))


def count_representable(max_length: int) -> int:
    """Monoid elements representable by a word of length <= max_length.

    An element x^i y^j x^k is also y^(j-i) x^j y^(j-k), and a shortest
    word for it is the shorter of those two spellings, so the count
    enumerates triples with min(i+j+k, 3j-i-k) <= max_length.
    """
    return sum(1 for m in enumerate_monomials(max_j=max_length) if m.min_length() <= max_length)


class CongruenceTable:
    """Partition of the words of length <= length_bound.

    Each word maps to the leader of its class: the first class member in
    (length, lex) enumeration order.  Two tables are equal iff they
    describe the same partition of the same universe.
    """

    __slots__ = ("length_bound", "leader_of")

    def __init__(self, length_bound: int, leader_of: dict[str, str]):
        self.length_bound = length_bound
        self.leader_of = leader_of

    @property
    def class_count(self) -> int:
        return len(set(self.leader_of.values()))

    def same_class(self, w1: str, w2: str) -> bool:
        return self.leader_of[w1] == self.leader_of[w2]

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for word in all_words(self.length_bound):
            out.setdefault(self.leader_of[word], []).append(word)
        return out

    def __eq__(self, other):
        if not isinstance(other, CongruenceTable):
            return NotImplemented
        return (
            self.length_bound == other.length_bound
            and self.leader_of == other.leader_of
        )

    def __repr__(self):
        return f"CongruenceTable(length_bound={self.length_bound}, classes={self.class_count})"


def classes_by_embedding(length_bound: int) -> CongruenceTable:
    if length_bound > DEFAULT_MAX_LENGTH:
        raise ValueError(f"length bound {length_bound} exceeds {DEFAULT_MAX_LENGTH}")
    leader_by_fold: dict[tuple[int, int, int, int], str] = {}
    leader_of: dict[str, str] = {}
    for word in all_words(length_bound):
        fold = fold_bicyclic(word)
        leader_of[word] = leader_by_fold.setdefault(fold, word)
    return CongruenceTable(length_bound, leader_of)


def relation_pairs(family: str, max_len: int) -> list[tuple[str, str]]:
    """The relation instances of a family with both sides of length <= max_len."""
    pairs: list[tuple[str, str]] = []
    if family == FEW1:
        j = 1
        while 2 * j + 1 <= max_len:
            pairs.append(("x" + "y" * j + "x" * j, "y" * (j - 1) + "x" * j))
            pairs.append(("y" * j + "x" * j + "y", "y" * j + "x" * (j - 1)))
            j += 1
    elif family == FEW2:
        j = 1
        while 2 * j + 1 <= max_len:
            pairs.append(("x" * j + "y" * j + "x", "x" * j + "y" * (j - 1)))
            pairs.append(("y" + "x" * j + "y" * j, "x" * (j - 1) + "y" * j))
            j += 1
    elif family == MANY:
        for j in range(1, max_len + 1):
            for i in range(j + 1):
                for k in range(j + 1):
                    if i + j + k > max_len or 3 * j - i - k > max_len:
                        continue
                    lhs = "x" * i + "y" * j + "x" * k
                    rhs = "y" * (j - i) + "x" * j + "y" * (j - k)
                    if lhs != rhs:
                        pairs.append((lhs, rhs))
    else:
        raise ValueError(f"unknown relation family {family!r}")
    return pairs


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller index as root so leaders follow enumeration order
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx


def classes_by_rewriting(
    length_bound: int, family: str, slack: int | None = None
) -> CongruenceTable:
    if length_bound > DEFAULT_MAX_LENGTH:
        raise ValueError(f"length bound {length_bound} exceeds {DEFAULT_MAX_LENGTH}")
    if family not in FAMILIES:
        raise ValueError(f"unknown relation family {family!r}")
    if slack is None:
        slack = DEFAULT_SLACK[family]
    max_len = length_bound + slack
    words = all_words(max_len)
    index = {w: n for n, w in enumerate(words)}
    folds = [fold_bicyclic(w) for w in words]
    uf = _UnionFind(len(words))

    for lhs, rhs in relation_pairs(family, max_len):
        grow = len(rhs) - len(lhs)
        for wi, word in enumerate(words):
            if grow > 0 and len(word) + grow > max_len:
                continue
            pos = word.find(lhs)
            while pos != -1:
                other = index[word[:pos] + rhs + word[pos + len(lhs):]]
                if folds[wi] != folds[other]:
                    # the relations are sound for the embedding, so a merge
                    # across embedding classes means the instance table is wrong
                    raise RuntimeError(
                        f"unsound merge {word!r} ~ {words[other]!r} in family {family}"
                    )
                uf.union(wi, other)
                pos = word.find(lhs, pos + 1)

    leader_of: dict[str, str] = {}
    leader_by_root: dict[int, str] = {}
    for wi, word in enumerate(words):
        if len(word) > length_bound:
            continue
        root = uf.find(wi)
        leader_of[word] = leader_by_root.setdefault(root, word)
    return CongruenceTable(length_bound, leader_of)


@dataclass
class CompareReport:
    """Outcome of cross-checking the rewriting closures against the embedding."""

    length_bound: int
    embedding_class_count: int
    element_count: int
    class_counts: dict[str, int]
    witnesses: dict[str, tuple[str, str] | None]

    @property
    def equal(self) -> bool:
        return all(w is None for w in self.witnesses.values()) and (
            self.embedding_class_count == self.element_count
        )

    def summary_lines(self) -> list[str]:
        lines = [
            f"length bound {self.length_bound}: embedding classes = "
            f"{self.embedding_class_count}, representable elements = {self.element_count}"
        ]
        for family in FAMILIES:
            wit = self.witnesses[family]
            status = "equal" if wit is None else f"REFINED, witness {wit[0]!r} / {wit[1]!r}"
            lines.append(
                f"  {family}: {self.class_counts[family]} classes, {status}"
            )
        return lines


def compare(length_bound: int) -> CompareReport:
    """Assert-style comparison of all four partitions at one length bound.

    A rewriting partition is always a refinement of the embedding
    partition (soundness); a strict refinement is reported with the
    first witness pair of words in enumeration order.
    """
    embedding = classes_by_embedding(length_bound)
    class_counts: dict[str, int] = {}
    witnesses: dict[str, tuple[str, str] | None] = {}
    for family in FAMILIES:
        table = classes_by_rewriting(length_bound, family)
        class_counts[family] = table.class_count
        witness = None
        for word in all_words(length_bound):
            mate = embedding.leader_of[word]
            if table.leader_of[word] != table.leader_of[mate]:
                witness = (mate, word)
                break
        witnesses[family] = witness
    return CompareReport(
        length_bound=length_bound,
        embedding_class_count=embedding.class_count,
        element_count=count_representable(length_bound),
        class_counts=class_counts,
        witnesses=witnesses,
    )
