"""The standard action of the monoid algebra and the counterexample space.

The standard module is V = V_1 + V_2 + ... with basis vectors b(n,h)
for 1 <= h <= n, on which the generators act as block shifts:

    x b(n,h) = b(n,h+1) for h < n,  x b(n,n) = 0
    y b(n,h) = b(n,h-1) for h > 1,  y b(n,1) = 0

The action is faithful, so truncations to the blocks n <= N give exact
matrices for algebra elements and support rank diagnostics.

The counterexample space adds one extra basis vector b+ and twists the
shifts:

    x b(n,n) = b+ (all n),  x b+ = 0             [x_ceg]
    y b(n,1) = b(n+1,1),    y b+ = b(1,1)        [y_ceg]

x_ceg has no strong inner inverse at all, yet the pair (x_ceg, y_ceg)
satisfies every power relation x^n y^n x^n = x^n and y^n x^n y^n = y^n.
The unit u cyclically permutes each block and fixes b+; the composite
x_ceg∘u does have a strong inner inverse, z_xu.  All of these are
``FormulaOperator`` values: exactly evaluable maps on finitely
supported vectors over the infinite basis, closed under integer linear
combination and composition, evaluated lazily one basis index at a
time so no truncation is ever involved.

Basis indices are (n, h) tuples; the extra vector is the module
constant ``PLUS``.
"""

from typing import Callable, NamedTuple

from .algebra import AlgebraElement, ell, rr
from .linalg import (
    Matrix,
    intersection_dim,
    matrix_from_columns,
    null_space_basis,
    rank,
    sparse_rank,
)
from .monoid import CanonicalMonomial

__all__ = [
    "PLUS",
    "SupportedVector",
    "basis_vector",
    "FormulaOperator",
    "x_std",
    "y_std",
    "identity_op",
    "x_ceg",
    "y_ceg",
    "u_perm",
    "z_xu",
    "monomial_operator",
    "act",
    "truncation_basis",
    "truncation_matrix",
    "independence_check",
    "faithfulness_first_failure",
    "lxr_image_check",
    "RelationViolation",
    "find_relation_violation",
    "relations_hold",
    "power_relations_hold",
    "conjugated_inner_inverse",
]

PLUS = "+"


def _check_index(idx, allow_plus: bool):
    if idx == PLUS:
        if not allow_plus:
            raise ValueError("the extra basis vector b+ only lives on the counterexample space")
        return
    if (
        not isinstance(idx, tuple)
        or len(idx) != 2
        or not all(isinstance(v, int) for v in idx)
        or not (1 <= idx[1] <= idx[0])
    ):
        raise ValueError(f"bad basis index {idx!r}; expected (n, h) with 1 <= h <= n")


def _index_sort_key(idx):
    # standard indices by block then position, b+ after everything
    return (1, 0, 0) if idx == PLUS else (0, idx[0], idx[1])


class SupportedVector:
    """Finitely supported vector over the basis, one exact field."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords: dict):
        self.field = field
        self.coords = coords

    @classmethod
    def from_items(cls, field, items, allow_plus: bool = True) -> "SupportedVector":
        acc: dict = {}
        for idx, coeff in items:
            _check_index(idx, allow_plus)
            if not coeff:
                continue
            new = acc.get(idx, field.zero) + coeff
            if new:
                acc[idx] = new
            elif idx in acc:
                del acc[idx]
        return cls(field, acc)

    def is_zero(self) -> bool:
        return not self.coords

    def coefficient(self, idx):
        return self.coords.get(idx, self.field.zero)

    def support(self) -> list:
        return sorted(self.coords, key=_index_sort_key)

    def __add__(self, other):
        if not isinstance(other, SupportedVector):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("mixed fields")
        acc = dict(self.coords)
        for idx, coeff in other.coords.items():
            new = acc.get(idx, self.field.zero) + coeff
            if new:
                acc[idx] = new
            elif idx in acc:
                del acc[idx]
        return SupportedVector(self.field, acc)

    def __sub__(self, other):
        if not isinstance(other, SupportedVector):
            return NotImplemented
        return self + other.scale(-self.field.one)

    def scale(self, coeff) -> "SupportedVector":
        if not coeff:
            return SupportedVector(self.field, {})
        return SupportedVector(self.field, {i: coeff * c for i, c in self.coords.items()})

    def __eq__(self, other):
        if not isinstance(other, SupportedVector):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for idx in self.support():
            coeff = self.coords[idx]
            name = "b+" if idx == PLUS else f"b({idx[0]},{idx[1]})"
            parts.append(name if coeff == self.field.one else f"{coeff}*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


def basis_vector(field, idx) -> SupportedVector:
    _check_index(idx, allow_plus=True)
    return SupportedVector(field, {idx: field.one})


class FormulaOperator:
    """Integer linear combination of compositions of named basis maps.

    Each named map sends every basis index to another index or to zero,
    so a composition chain can be evaluated index by index and the whole
    operator has finite support on finitely supported input.  Operators
    combine with +, -, integer scalars, * (composition) and ** (power).
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: str, terms: list[tuple[int, tuple]]):
        self.space = space
        self.terms = terms

    @classmethod
    def named(cls, space: str, name: str, fn: Callable) -> "FormulaOperator":
        return cls(space, [(1, ((name, fn),))])

    def _check_space(self, other: "FormulaOperator"):
        if self.space != other.space:
            raise ValueError(f"operators on different spaces: {self.space} vs {other.space}")

    def apply_index(self, idx) -> dict:
        """Image of a basis vector, as a mapping index -> integer coefficient."""
        _check_index(idx, allow_plus=self.space == "ceg")
        out: dict = {}
        for coeff, chain in self.terms:
            cur = idx
            for _, fn in reversed(chain):
                cur = fn(cur)
                if cur is None:
                    break
            if cur is None:
                continue
            new = out.get(cur, 0) + coeff
            if new:
                out[cur] = new
            elif cur in out:
                del out[cur]
        return out

    def apply(self, vec: SupportedVector) -> SupportedVector:
        items = []
        for idx, coeff in vec.coords.items():
            for target, mult in self.apply_index(idx).items():
                items.append((target, coeff * mult))
        return SupportedVector.from_items(vec.field, items)

    def __mul__(self, other):
        if not isinstance(other, FormulaOperator):
            return NotImplemented
        self._check_space(other)
        terms = {}
        for c1, chain1 in self.terms:
            for c2, chain2 in other.terms:
                chain = chain1 + chain2
                terms[chain] = terms.get(chain, 0) + c1 * c2
        return FormulaOperator(self.space, [(c, ch) for ch, c in terms.items() if c])

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return FormulaOperator(self.space, [])
        return FormulaOperator(self.space, [(scalar * c, ch) for c, ch in self.terms])

    def __add__(self, other):
        if not isinstance(other, FormulaOperator):
            return NotImplemented
        self._check_space(other)
        terms = {}
        for c, ch in self.terms + other.terms:
            terms[ch] = terms.get(ch, 0) + c
        return FormulaOperator(self.space, [(c, ch) for ch, c in terms.items() if c])

    def __sub__(self, other):
        if not isinstance(other, FormulaOperator):
            return NotImplemented
        return self + (-1) * other

    def __pow__(self, n: int) -> "FormulaOperator":
        if n < 0:
            raise ValueError("negative operator power")
        result = identity_op(self.space)
        for _ in range(n):
            result = result * self
        return result

    def agrees_with(self, other: "FormulaOperator", indices) -> bool:
        self._check_space(other)
        return all(self.apply_index(i) == other.apply_index(i) for i in indices)

    def __repr__(self):
        names = [
            f"{c if c != 1 else ''}{'·'.join(n for n, _ in ch) if ch else '1'}"
            for c, ch in self.terms
        ]
        return f"FormulaOperator({self.space}: {' + '.join(names) or '0'})"


def identity_op(space: str) -> FormulaOperator:
    return FormulaOperator(space, [(1, ())])


def _x_std(idx):
    n, h = idx
    return (n, h + 1) if h < n else None


def _y_std(idx):
    n, h = idx
    return (n, h - 1) if h > 1 else None


def _x_ceg(idx):
    if idx == PLUS:
        return None
    n, h = idx
    return (n, h + 1) if h < n else PLUS


def _y_ceg(idx):
    if idx == PLUS:
        return (1, 1)
    n, h = idx
    return (n, h - 1) if h > 1 else (n + 1, 1)


def _u_perm(idx):
    if idx == PLUS:
        return PLUS
    n, h = idx
    return (n, h - 1) if h > 1 else (n, n)


def _z_xu(idx):
    if idx == PLUS:
        return (1, 1)
    n, h = idx
    return (n, h) if h > 1 else None


x_std = FormulaOperator.named("std", "x", _x_std)
y_std = FormulaOperator.named("std", "y", _y_std)
x_ceg = FormulaOperator.named("ceg", "x", _x_ceg)
y_ceg = FormulaOperator.named("ceg", "y", _y_ceg)
u_perm = FormulaOperator.named("ceg", "u", _u_perm)
z_xu = FormulaOperator.named("ceg", "z", _z_xu)


def monomial_operator(m: CanonicalMonomial, space: str = "std") -> FormulaOperator:
    xs, ys = (x_std, y_std) if space == "std" else (x_ceg, y_ceg)
    return xs**m.i * ys**m.j * xs**m.k


def act(a: AlgebraElement, vec: SupportedVector) -> SupportedVector:
    """Action of an algebra element on the standard space."""
    if a.field != vec.field:
        raise ValueError("mixed fields")
    if PLUS in vec.coords:
        raise ValueError("the algebra acts on the standard space; b+ is not allowed here")
    total = SupportedVector(vec.field, {})
    for mono, coeff in a.terms.items():
        total = total + monomial_operator(mono).apply(vec).scale(coeff)
    return total


def truncation_basis(blocks: int) -> list[tuple[int, int]]:
    """Indices of V_1 + ... + V_N in (block, position) order."""
    return [(n, h) for n in range(1, blocks + 1) for h in range(1, n + 1)]


def truncation_matrix(a: AlgebraElement, blocks: int) -> Matrix:
    """Matrix of an algebra element on the first N blocks.

    The blocks are invariant, so this is a homomorphism: products and
    sums of elements go to products and sums of matrices.
    """
    basis = truncation_basis(blocks)
    index = {idx: i for i, idx in enumerate(basis)}
    out = Matrix.zeros(a.field, len(basis), len(basis))
    for mono, coeff in a.terms.items():
        op = monomial_operator(mono)
        for col, idx in enumerate(basis):
            for target, mult in op.apply_index(idx).items():
                row = index[target]
                out.rows[row][col] = out.rows[row][col] + coeff * a.field.from_int(mult)
    return out


def independence_check(monomials, blocks: int, field) -> bool:
    """Are the truncation matrices of these monomials linearly independent?"""
    monos = sorted(set(monomials), key=CanonicalMonomial.sort_key)
    dim = blocks * (blocks + 1) // 2
    basis = truncation_basis(blocks)
    index = {idx: i for i, idx in enumerate(basis)}
    rows = []
    one = field.one
    for mono in monos:
        op = monomial_operator(mono)
        entries: dict = {}
        for col, idx in enumerate(basis):
            for target, mult in op.apply_index(idx).items():
                entries[index[target] * dim + col] = field.from_int(mult)
        rows.append(entries)
    return sparse_rank(field, rows) == len(monos)


def faithfulness_first_failure(xmat: Matrix) -> int:
    """Least i >= 1 with im(x^i) & ker(x) = im(x^(i-1)) & ker(x).

    Distinctness of these intersections for every i is exactly
    faithfulness of an action; a finite matrix always fails at some
    i <= dim + 1 and that first failure is returned.
    """
    if xmat.nrows != xmat.ncols:
        raise ValueError("expected a square matrix")
    field = xmat.field
    dim = xmat.nrows
    kernel = null_space_basis(xmat)
    prev = len(kernel)  # dim of im(x^0) & ker(x) = ker(x)
    power = Matrix.identity(field, dim)
    i = 0
    while True:
        i += 1
        power = power * xmat
        image = [power.col(j) for j in range(dim)]
        cur = intersection_dim(field, image, kernel, dim)
        # the chain is decreasing, so equal dimensions mean equal spaces
        if cur == prev:
            return i
        prev = cur


def lxr_image_check(i: int, blocks: int, field) -> bool:
    """Check that r_i and l_i cut out the advertised complements.

    On the truncation: im(r_i) is a complement of ker(x^(i-1)) inside
    ker(x^i), and im(l_i) is a complement of im(x^i) inside im(x^(i-1));
    both projections annihilate the subspace they complement.
    """
    if not (1 <= i <= blocks):
        raise ValueError("need 1 <= i <= blocks")
    from .algebra import gen_x  # local import to avoid a cycle at module load

    xmat = truncation_matrix(gen_x(field), blocks)
    rmat = truncation_matrix(rr(field, i), blocks)
    lmat = truncation_matrix(ell(field, i), blocks)
    dim = xmat.nrows
    xi = xmat**i
    xprev = xmat ** (i - 1)

    ker_prev = null_space_basis(xprev)
    ker_i = null_space_basis(xi)
    r_cols = [rmat.col(j) for j in range(dim)]

    checks = [
        # r_i annihilates ker(x^(i-1))
        all(not any(rmat.apply(v)) for v in ker_prev),
        # im(r_i) inside ker(x^i)
        (xi * rmat).is_zero(),
        # complement: trivial intersection and dimensions adding up
        intersection_dim(field, r_cols, ker_prev, dim) == 0,
        rank(rmat) + len(ker_prev) == len(ker_i),
        # l_i annihilates im(x^i)
        (lmat * xi).is_zero(),
        # im(l_i) inside im(x^(i-1))
        rank(matrix_from_columns(field, xprev.columns() + lmat.columns(), dim))
        == rank(xprev),
        # complement of im(x^i) in im(x^(i-1))
        intersection_dim(field, lmat.columns(), xi.columns(), dim) == 0,
        rank(lmat) + rank(xi) == rank(xprev),
    ]
    return all(checks)


class RelationViolation(NamedTuple):
    family: int
    j: int
    index: object
    left: dict
    right: dict


def _relation_sides(family: int, j: int, x_op: FormulaOperator, y_op: FormulaOperator):
    if family == 1:
        return x_op * y_op**j * x_op**j, y_op ** (j - 1) * x_op**j
    if family == 2:
        return y_op**j * x_op**j * y_op, y_op**j * x_op ** (j - 1)
    raise ValueError("family is 1 or 2")


def scan_indices(max_block: int, include_plus: bool) -> list:
    indices: list = [(n, h) for n in range(1, max_block + 1) for h in range(1, n + 1)]
    if include_plus:
        indices.append(PLUS)
    return indices


def find_relation_violation(
    x_op: FormulaOperator,
    y_op: FormulaOperator,
    jmax: int,
    max_block: int,
    include_plus: bool = True,
) -> RelationViolation | None:
    """First failing defining relation, scanning j, then family, then indices."""
    indices = scan_indices(max_block, include_plus and x_op.space == "ceg")
    for j in range(1, jmax + 1):
        for family in (1, 2):
            lhs, rhs = _relation_sides(family, j, x_op, y_op)
            for idx in indices:
                left = lhs.apply_index(idx)
                right = rhs.apply_index(idx)
                if left != right:
                    return RelationViolation(family, j, idx, left, right)
    return None


def relations_hold(
    x_op: FormulaOperator,
    y_op: FormulaOperator,
    jmax: int,
    max_block: int,
    include_plus: bool = True,
) -> bool:
    return find_relation_violation(x_op, y_op, jmax, max_block, include_plus) is None


def power_relations_hold(
    x_op: FormulaOperator,
    y_op: FormulaOperator,
    nmax: int,
    max_block: int,
    include_plus: bool = True,
) -> bool:
    """x^n y^n x^n = x^n and y^n x^n y^n = y^n on the scanned basis vectors."""
    indices = scan_indices(max_block, include_plus and x_op.space == "ceg")
    for n in range(1, nmax + 1):
        xn = x_op**n
        yn = y_op**n
        if not (xn * yn * xn).agrees_with(xn, indices):
            return False
        if not (yn * xn * yn).agrees_with(yn, indices):
            return False
    return True


def conjugated_inner_inverse(blocks: int, field) -> tuple[Matrix, Matrix, Matrix]:
    """Truncation matrices (X, Y, (1+X)^-1 Y (1+X)).

    X is nilpotent on the truncation, so 1+X is invertible; conjugation
    fixes X and sends Y to a different strong inner inverse of X.
    """
    from . import linalg
    from .algebra import gen_x, gen_y

    xmat = truncation_matrix(gen_x(field), blocks)
    ymat = truncation_matrix(gen_y(field), blocks)
    t = Matrix.identity(field, xmat.nrows) + xmat
    conj = linalg.inverse(t) * ymat * t
    return xmat, ymat, conj
