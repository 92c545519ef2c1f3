"""The projection basis of the monoid algebra and exact conversion to it.

The algebra has a basis consisting of twelve term shapes built from
powers of the generators and the projection idempotents l_i, r_i:

    y^m, 1, x^m
    y^m l_i (i > m >= 1),   l_i,        x^m l_i (i, m >= 1)
    y^m r_i (i, m >= 1),    r_i,        x^m r_i (i > m >= 1)
    y^m r_i l_j (j > m),    r_i l_j,    x^m r_i l_j (i > m)

Every term is homogeneous for the letter-count grading, of degree equal
to the signed prefix exponent, so conversion splits the input by degree
and solves one small exact linear system per degree.  The candidate set
for an input whose largest middle exponent is J consists of the terms
with all parameters <= J+1; the conversion recombines its own output
and checks it against the input, so a bad candidate bound would be
caught on the spot rather than producing wrong coordinates.
"""

from dataclasses import dataclass

from . import algebra
from .algebra import AlgebraElement
from .linalg import Matrix, PreparedSolve
from .monoid import CanonicalMonomial

__all__ = [
    "ProjectionBasisTerm",
    "expand_term",
    "terms_with_parameters",
    "to_projection_basis",
    "recombine",
]


@dataclass(frozen=True, slots=True)
class ProjectionBasisTerm:
    """One basis term: an optional generator power, then r_i, then l_j.

    ``power`` > 0 encodes the prefix x^power, < 0 the prefix y^(-power),
    0 no prefix; ``r`` and ``l`` are the projection indices, 0 meaning
    the factor is absent.  The constructor enforces the side conditions
    listed in the module docstring.
    """

    power: int
    r: int = 0
    l: int = 0

    def __post_init__(self):
        if self.r < 0 or self.l < 0:
            raise ValueError("projection indices must be non-negative")
        m = self.power
        if self.l and m < 0 and self.l <= -m:
            raise ValueError(f"a y^{-m} prefix requires l > {-m}, got l = {self.l}")
        if self.r and m > 0 and self.r <= m:
            raise ValueError(f"an x^{m} prefix requires r > {m}, got r = {self.r}")

    @property
    def degree(self) -> int:
        return self.power

    def parameters(self) -> tuple[int, ...]:
        return tuple(p for p in (abs(self.power), self.r, self.l) if p)

    def sort_key(self) -> tuple[int, int, int]:
        return (self.power, self.r, self.l)

    def __str__(self):
        parts = []
        if self.power > 0:
            parts.append(f"x^{self.power}" if self.power > 1 else "x")
        elif self.power < 0:
            parts.append(f"y^{-self.power}" if self.power < -1 else "y")
        if self.r:
            parts.append(f"r{self.r}")
        if self.l:
            parts.append(f"l{self.l}")
        return "*".join(parts) if parts else "1"


def expand_term(field, term: ProjectionBasisTerm) -> AlgebraElement:
    """Multiply the defining expression out into canonical monomials."""
    result = algebra.one(field)
    if term.r:
        result = algebra.rr(field, term.r)
    if term.l:
        result = result * algebra.ell(field, term.l)
    if term.power > 0:
        result = algebra.xpow(field, term.power) * result
    elif term.power < 0:
        result = algebra.ypow(field, -term.power) * result
    return result


def terms_with_parameters(bound: int) -> list[ProjectionBasisTerm]:
    """All basis terms whose parameters m, i, j are <= bound."""
    terms = [ProjectionBasisTerm(0)]
    for m in range(1, bound + 1):
        terms.append(ProjectionBasisTerm(m))
        terms.append(ProjectionBasisTerm(-m))
    for i in range(1, bound + 1):
        terms.append(ProjectionBasisTerm(0, 0, i))
        terms.append(ProjectionBasisTerm(0, i, 0))
        for m in range(1, bound + 1):
            terms.append(ProjectionBasisTerm(m, 0, i))  # x^m l_i
            if i > m:
                terms.append(ProjectionBasisTerm(-m, 0, i))  # y^m l_i
                terms.append(ProjectionBasisTerm(m, i, 0))  # x^m r_i
            terms.append(ProjectionBasisTerm(-m, i, 0))  # y^m r_i
        for j in range(1, bound + 1):
            terms.append(ProjectionBasisTerm(0, i, j))
            for m in range(1, bound + 1):
                if i > m:
                    terms.append(ProjectionBasisTerm(m, i, j))
                if j > m:
                    terms.append(ProjectionBasisTerm(-m, i, j))
    return sorted(terms, key=ProjectionBasisTerm.sort_key)


class _DegreeSystem:
    """Prepared conversion system for one (field, degree, parameter bound)."""

    __slots__ = ("terms", "row_index", "solver")

    def __init__(self, field, degree: int, bound: int):
        self.terms = [t for t in terms_with_parameters(bound) if t.degree == degree]
        expansions = [expand_term(field, t) for t in self.terms]
        monos: set[CanonicalMonomial] = set()
        for e in expansions:
            monos.update(e.terms)
        rows = sorted(monos, key=CanonicalMonomial.sort_key)
        self.row_index = {m: r for r, m in enumerate(rows)}
        matrix = Matrix.zeros(field, len(rows), len(self.terms))
        for c, e in enumerate(expansions):
            for mono, coeff in e.terms.items():
                matrix.rows[self.row_index[mono]][c] = coeff
        self.solver = PreparedSolve(matrix)

    def solve(self, component: AlgebraElement):
        field = component.field
        vec = [field.zero] * len(self.row_index)
        for mono, coeff in component.terms.items():
            row = self.row_index.get(mono)
            if row is None:
                raise RuntimeError(
                    f"monomial {mono} is outside the span of the candidate terms; "
                    "the projection basis bookkeeping is broken"
                )
            vec[row] = coeff
        solution = self.solver.solve(vec)
        if solution is None:
            raise RuntimeError(
                "inconsistent projection-basis system; the terms form a basis, "
                "so this is an implementation bug"
            )
        return [(c, t) for c, t in zip(solution, self.terms) if c]


_system_cache: dict = {}


def _degree_system(field, degree: int, bound: int) -> _DegreeSystem:
    key = (field, degree, bound)
    if key not in _system_cache:
        _system_cache[key] = _DegreeSystem(field, degree, bound)
    return _system_cache[key]


def to_projection_basis(a: AlgebraElement) -> list[tuple[object, ProjectionBasisTerm]]:
    """Exact coordinates of a in the projection basis.

    The coordinate list is unique; recombining it reproduces a (checked
    on every call).
    """
    if a.is_zero():
        return []
    bound = a.max_j() + 1
    coords: list[tuple[object, ProjectionBasisTerm]] = []
    parts = algebra.degree_split(a)
    for degree in sorted(parts):
        coords.extend(_degree_system(a.field, degree, bound).solve(parts[degree]))
    if recombine(a.field, coords) != a:
        raise RuntimeError(
            "projection-basis conversion failed its round trip; "
            "the candidate parameter bound is wrong"
        )
    return coords


def recombine(field, coords) -> AlgebraElement:
    """Sum of coeff * expanded term; inverse of to_projection_basis."""
    total = algebra.zero(field)
    for coeff, term in coords:
        total = total + expand_term(field, term).scale(coeff)
    return total
