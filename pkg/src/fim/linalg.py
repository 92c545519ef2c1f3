"""Dense exact linear algebra over the scalar fields.

Matrices act on column vectors from the left; vectors are plain lists
of scalars.  Gaussian elimination always takes the first nonzero pivot
in row order, so ranks, kernel bases, image bases and solutions are
reproducible run to run.
"""

from .fields import field_from_name

__all__ = [
    "Matrix",
    "PreparedSolve",
    "rank",
    "rref",
    "null_space_basis",
    "column_space_basis",
    "solve",
    "inverse",
    "matrix_from_columns",
    "intersection_dim",
    "subspace_intersection_basis",
    "RankTracker",
    "sparse_rank",
    "from_envelope",
]


class Matrix:
    """Rectangular matrix over one exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows: list[list]):
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        return cls(field, [list(row) for row in rows])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.field, [row[:] for row in self.rows])

    def col(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(not entry for row in self.rows for entry in row)

    def _check_companion(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError("mixed fields")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_companion(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_companion(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [[c * a for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_companion(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.field.zero
        out = [[zero] * other.ncols for _ in range(self.nrows)]
        for i in range(self.nrows):
            arow = self.rows[i]
            orow = out[i]
            for k in range(self.ncols):
                aik = arow[k]
                if not aik:
                    continue
                brow = other.rows[k]
                for j in range(other.ncols):
                    bkj = brow[j]
                    if bkj:
                        orow[j] = orow[j] + aik * bkj
        return Matrix(self.field, out)

    def __pow__(self, n: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative power; use inverse() explicitly")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def apply(self, vec: list) -> list:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero
        out = [zero] * self.nrows
        for i, row in enumerate(self.rows):
            acc = zero
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out[i] = acc
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.rows)] if self.rows else [])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def to_envelope(self) -> dict:
        """JSON form {"field": ..., "dim": ..., "rows": [[scalar strings]]}."""
        if self.nrows != self.ncols:
            raise ValueError("only square operators are serialized")
        return {
            "field": self.field.name,
            "dim": self.nrows,
            "rows": [[str(entry) for entry in row] for row in self.rows],
        }


def from_envelope(data: dict) -> Matrix:
    try:
        field = field_from_name(data["field"])
        dim = data["dim"]
        raw_rows = data["rows"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad matrix envelope: {exc}") from None
    if not isinstance(dim, int) or dim < 0 or len(raw_rows) != dim:
        raise ValueError(f"bad matrix envelope: expected {dim} rows")
    rows = []
    for r, raw in enumerate(raw_rows):
        if len(raw) != dim:
            raise ValueError(f"bad matrix envelope: row {r} has {len(raw)} entries, want {dim}")
        rows.append([field.parse(entry) for entry in raw])
    return Matrix(field, rows)


def _eliminate(rows: list[list], transform: list[list] | None):
    """In-place Gauss-Jordan; returns the pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        pivot = None
        for r in range(prow, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != prow:
            rows[prow], rows[pivot] = rows[pivot], rows[prow]
            if transform is not None:
                transform[prow], transform[pivot] = transform[pivot], transform[prow]
        scale = rows[prow][col]
        rows[prow] = [entry / scale for entry in rows[prow]]
        if transform is not None:
            transform[prow] = [entry / scale for entry in transform[prow]]
        for r in range(nrows):
            if r == prow:
                continue
            factor = rows[r][col]
            if not factor:
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[prow])]
            if transform is not None:
                transform[r] = [
                    a - factor * b for a, b in zip(transform[r], transform[prow])
                ]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows = [row[:] for row in m.rows]
    pivots = _eliminate(rows, None)
    return Matrix(m.field, rows), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def null_space_basis(m: Matrix) -> list[list]:
    """Kernel basis; one vector per free column, in column order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    zero, one = m.field.zero, m.field.one
    basis = []
    for free in free_cols:
        vec = [zero] * m.ncols
        vec[free] = one
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -reduced.rows[prow][free]
        basis.append(vec)
    return basis


def column_space_basis(m: Matrix) -> list[list]:
    """The pivot columns of m itself, so image bases are reproducible."""
    _, pivots = rref(m)
    return [m.col(c) for c in pivots]


def solve(m: Matrix, b: list) -> list | None:
    """One exact solution of m x = b (free variables zero), or None."""
    if len(b) != m.nrows:
        raise ValueError("rhs length mismatch")
    rows = [row[:] + [b[r]] for r, row in enumerate(m.rows)]
    pivots = _eliminate(rows, None)
    if pivots and pivots[-1] == m.ncols:
        return None  # pivot in the augmented column: inconsistent
    zero = m.field.zero
    x = [zero] * m.ncols
    for prow, pcol in enumerate(pivots):
        x[pcol] = rows[prow][m.ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    rows = [row[:] for row in m.rows]
    transform = Matrix.identity(m.field, m.nrows).rows
    pivots = _eliminate(rows, transform)
    if len(pivots) != m.nrows:
        raise ValueError("matrix is singular")
    return Matrix(m.field, transform)


def matrix_from_columns(field, columns: list[list], nrows: int | None = None) -> Matrix:
    if not columns:
        if nrows is None:
            raise ValueError("cannot infer row count of an empty column list")
        return Matrix(field, [[] for _ in range(nrows)])
    nrows = len(columns[0])
    return Matrix(field, [[col[r] for col in columns] for r in range(nrows)])


def intersection_dim(field, u_cols: list[list], v_cols: list[list], dim: int) -> int:
    """dim(span U  intersect  span V) = rk U + rk V - rk [U V]."""
    ru = rank(matrix_from_columns(field, u_cols, dim)) if u_cols else 0
    rv = rank(matrix_from_columns(field, v_cols, dim)) if v_cols else 0
    if not u_cols or not v_cols:
        return 0
    rboth = rank(matrix_from_columns(field, u_cols + v_cols, dim))
    return ru + rv - rboth


def subspace_intersection_basis(field, u_cols: list[list], v_cols: list[list], dim: int) -> list[list]:
    """Deterministic basis of span U intersect span V."""
    if not u_cols or not v_cols:
        return []
    stacked = matrix_from_columns(field, u_cols + [[-e for e in col] for col in v_cols], dim)
    vectors = []
    for w in null_space_basis(stacked):
        coeffs = w[: len(u_cols)]
        vec = [field.zero] * dim
        for c, col in zip(coeffs, u_cols):
            if c:
                vec = [a + c * b for a, b in zip(vec, col)]
        if any(vec):
            vectors.append(vec)
    tracker = RankTracker(field, dim)
    return [v for v in vectors if tracker.add(v)]


class RankTracker:
    """Incremental independence filter over a fixed ambient dimension."""

    __slots__ = ("field", "dim", "echelon")

    def __init__(self, field, dim: int):
        self.field = field
        self.dim = dim
        self.echelon: list[tuple[int, list]] = []  # (pivot position, normalized row)

    @property
    def rank(self) -> int:
        return len(self.echelon)

    def reduce(self, vec: list) -> list:
        w = list(vec)
        for pos, row in self.echelon:
            factor = w[pos]
            if factor:
                w = [a - factor * b for a, b in zip(w, row)]
        return w

    def add(self, vec: list) -> bool:
        """Insert vec if independent of what is stored; report whether it was."""
        w = self.reduce(vec)
        for pos, entry in enumerate(w):
            if entry:
                row = [a / entry for a in w]
                self.echelon.append((pos, row))
                self.echelon.sort(key=lambda item: item[0])
                return True
        return False


def sparse_rank(field, rows: list[dict]) -> int:
    """Rank of sparsely given rows (mapping position -> scalar)."""
    pivots: dict = {}
    count = 0
    for row in rows:
        current = dict(row)
        while current:
            key = min(current)
            if key not in pivots:
                inv = current[key]
                pivots[key] = {k: v / inv for k, v in current.items()}
                count += 1
                break
            factor = current[key]
            for k, v in pivots[key].items():
                newval = current.get(k, field.zero) - factor * v
                if newval:
                    current[k] = newval
                elif k in current:
                    del current[k]
        # empty row contributes nothing
    return count


class PreparedSolve:
    """Reusable exact solver for m x = b with a fixed m.

    Runs Gauss-Jordan with a transform once; each solve is then a single
    matrix-vector product plus consistency checks.
    """

    __slots__ = ("matrix", "transform", "pivots")

    def __init__(self, m: Matrix):
        rows = [row[:] for row in m.rows]
        transform = Matrix.identity(m.field, m.nrows).rows
        self.pivots = _eliminate(rows, transform)
        self.transform = Matrix(m.field, transform)
        self.matrix = m

    def solve(self, b: list) -> list | None:
        w = self.transform.apply(b)
        zero = self.matrix.field.zero
        x = [zero] * self.matrix.ncols
        for prow, pcol in enumerate(self.pivots):
            x[pcol] = w[prow]
        for r in range(len(self.pivots), self.matrix.nrows):
            if w[r]:
                return None
        return x
