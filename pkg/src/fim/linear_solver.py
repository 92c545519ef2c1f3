"""Strong inner inverses for square matrices over exact fields.

Any square matrix A splits as an invertible part plus a nilpotent part:
for the least N with rank(A^N) = rank(A^(N+1)), the space is the direct
sum of im(A^N) and ker(A^N), both A-invariant, with A invertible on the
former and nilpotent on the latter.  The nilpotent part decomposes into
shift chains b', Ab', ..., A^m b' ending in ker(A).  The strong inner
inverse Y inverts A on the invertible part and walks every chain
backwards (killing the seed); A and Y then satisfy the full defining
relation family of the one-generator free inverse monoid

    A Y^j A^j = Y^(j-1) A^j,   Y^j A^j Y = Y^j A^(j-1)   (j >= 1),

which ``verify_strong`` checks by exact matrix products.  Elimination
uses deterministic pivoting throughout, so the constructed Y is
reproducible.
"""

import random
from dataclasses import dataclass

from .fields import QQ, PrimeField
from .linalg import (
    Matrix,
    column_space_basis,
    inverse,
    matrix_from_columns,
    null_space_basis,
    rank,
    solve,
    subspace_intersection_basis,
    RankTracker,
)

__all__ = [
    "FittingSplit",
    "BasicChain",
    "fitting_split",
    "basic_chains",
    "strong_inner_inverse",
    "VerifyReport",
    "verify_strong",
    "inner_inverse_properties_hold",
    "suite_matrices",
    "DEFAULT_SUITE_SEED",
]

DEFAULT_SUITE_SEED = 1729


@dataclass
class FittingSplit:
    """Least stabilizing exponent with bases of im(A^N) and ker(A^N)."""

    exponent: int
    image_basis: list[list]
    kernel_basis: list[list]


@dataclass
class BasicChain:
    """Vectors b', A b', ..., A^m b'; the last one lies in ker(A)."""

    vectors: list[list]

    @property
    def length(self) -> int:
        return len(self.vectors)

    @property
    def seed(self) -> list:
        return self.vectors[0]


def fitting_split(a: Matrix) -> FittingSplit:
    if a.nrows != a.ncols:
        raise ValueError("expected a square matrix")
    dim = a.nrows
    power = Matrix.identity(a.field, dim)
    prev_rank = dim
    exponent = 0
    while True:
        nxt = power * a
        nxt_rank = rank(nxt)
        if nxt_rank == prev_rank:
            break
        power = nxt
        prev_rank = nxt_rank
        exponent += 1
    image = column_space_basis(power) if exponent else [
        Matrix.identity(a.field, dim).col(j) for j in range(dim)
    ]
    kernel = null_space_basis(power) if exponent else []
    if len(image) + len(kernel) != dim:
        raise RuntimeError("Fitting split does not span; elimination is broken")
    return FittingSplit(exponent, image, kernel)


def basic_chains(a: Matrix) -> list[BasicChain]:
    """Chain basis of a nilpotent operator.

    Follows the kernel filtration ker(A) & im(A^i) downwards: pick a
    basis at the deepest level, extend level by level, lift each chosen
    b in ker(A) & im(A^i) to b' with A^i b' = b, and emit the chain of
    length i+1.  The chain vectors jointly form a basis.
    """
    if a.nrows != a.ncols:
        raise ValueError("expected a square matrix")
    dim = a.nrows
    if dim == 0:
        return []
    field = a.field

    powers = [Matrix.identity(field, dim)]
    while not powers[-1].is_zero():
        if len(powers) > dim:
            raise ValueError("operator is not nilpotent")
        powers.append(powers[-1] * a)
    nil_index = len(powers) - 1  # least t with A^t = 0

    kernel = null_space_basis(a)
    tracker = RankTracker(field, dim)
    chosen: list[tuple[int, list]] = []  # (filtration level, kernel vector)
    for level in range(nil_index - 1, -1, -1):
        if level == 0:
            candidates = kernel
        else:
            candidates = subspace_intersection_basis(
                field, kernel, powers[level].columns(), dim
            )
        for vec in candidates:
            if tracker.add(vec):
                chosen.append((level, vec))

    chains = []
    for level, target in chosen:
        if level == 0:
            seed = target
        else:
            seed = solve(powers[level], target)
            if seed is None:
                raise RuntimeError("missing lift in the kernel filtration")
        vectors = [seed]
        for _ in range(level):
            vectors.append(a.apply(vectors[-1]))
        chains.append(BasicChain(vectors))

    joint = RankTracker(field, dim)
    count = sum(joint.add(v) for chain in chains for v in chain.vectors)
    if count != dim:
        raise RuntimeError("chain vectors do not form a basis")
    return chains


def strong_inner_inverse(a: Matrix) -> Matrix:
    """A strong inner inverse of any square matrix over an exact field."""
    if a.nrows != a.ncols:
        raise ValueError("expected a square matrix")
    dim = a.nrows
    field = a.field
    if dim == 0:
        return Matrix(field, [])
    split = fitting_split(a)

    domain_cols: list[list] = []
    image_cols: list[list] = []

    if split.image_basis:
        img = matrix_from_columns(field, split.image_basis, dim)
        # restriction of A to the invertible part, in its own coordinates
        restriction_cols = []
        for col in split.image_basis:
            coords = solve(img, a.apply(col))
            if coords is None:
                raise RuntimeError("image part is not invariant")
            restriction_cols.append(coords)
        restriction = matrix_from_columns(field, restriction_cols, len(split.image_basis))
        back = img * inverse(restriction)
        domain_cols.extend(split.image_basis)
        image_cols.extend(back.col(j) for j in range(back.ncols))

    if split.kernel_basis:
        ker = matrix_from_columns(field, split.kernel_basis, dim)
        restriction_cols = []
        for col in split.kernel_basis:
            coords = solve(ker, a.apply(col))
            if coords is None:
                raise RuntimeError("kernel part is not invariant")
            restriction_cols.append(coords)
        nilpotent = matrix_from_columns(field, restriction_cols, len(split.kernel_basis))
        zero_vec = [field.zero] * dim
        for chain in basic_chains(nilpotent):
            ambient = [ker.apply(v) for v in chain.vectors]
            domain_cols.extend(ambient)
            image_cols.append(zero_vec)  # the seed goes to zero
            image_cols.extend(ambient[:-1])  # later vectors shift back

    basis = matrix_from_columns(field, domain_cols, dim)
    images = matrix_from_columns(field, image_cols, dim)
    return images * inverse(basis)


@dataclass
class VerifyReport:
    ok: bool
    witness: tuple[int, int] | None  # (family, j) of the first failure

    def __bool__(self):
        return self.ok


def verify_strong(a: Matrix, y: Matrix, jmax: int) -> VerifyReport:
    """Check both defining relation families for 1 <= j <= jmax."""
    if a.field != y.field:
        raise ValueError("mixed fields")
    if a.nrows != a.ncols or a.nrows != y.nrows or y.nrows != y.ncols:
        raise ValueError("expected square matrices of equal size")
    xp = Matrix.identity(a.field, a.nrows)
    yp = Matrix.identity(a.field, a.nrows)
    xpowers = [xp]
    ypowers = [yp]
    for j in range(1, jmax + 1):
        xpowers.append(xpowers[-1] * a)
        ypowers.append(ypowers[-1] * y)
        mixed = ypowers[j] * xpowers[j]
        if a * mixed != ypowers[j - 1] * xpowers[j]:
            return VerifyReport(False, (1, j))
        if mixed * y != ypowers[j] * xpowers[j - 1]:
            return VerifyReport(False, (2, j))
    return VerifyReport(True, None)


def inner_inverse_properties_hold(a: Matrix, y: Matrix, jmax: int) -> bool:
    """The relation families plus AYA = A, YAY = Y and commuting idempotents."""
    if not verify_strong(a, y, jmax).ok:
        return False
    aya = a * y * a
    yay = y * a * y
    if aya != a or yay != y:
        return False
    e, f = a * y, y * a
    return e * f == f * e


def random_matrix(field, dim: int, rng: random.Random) -> Matrix:
    if isinstance(field, PrimeField):
        return Matrix(
            field,
            [[field.from_int(rng.randrange(field.p)) for _ in range(dim)] for _ in range(dim)],
        )
    return Matrix(
        field,
        [[field.from_int(rng.randint(-3, 3)) for _ in range(dim)] for _ in range(dim)],
    )


def suite_matrices(count: int, field, seed: int = DEFAULT_SUITE_SEED, max_dim: int = 8):
    """Deterministic random matrices: dims cycle 1..max_dim, fixed seed."""
    rng = random.Random((seed, field.name))
    for index in range(count):
        dim = 1 + index % max_dim
        yield random_matrix(field, dim, rng)
