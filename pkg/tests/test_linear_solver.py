"""Fitting split, chain extraction, and the matrix strong inner inverse."""

from fractions import Fraction as F

import pytest

from fim.fields import QQ, PrimeField
from fim.linalg import Matrix,RankTracker, inverse, matrix_from_columns, rank, solve
from fim.linear_solver import (
    BasicChain,
    basic_chains,
    fitting_split,
    inner_inverse_properties_hold,
    strong_inner_inverse,
    suite_matrices,
    verify_strong,
)

F5 = PrimeField(5)


def shift_matrix(field, dim):
    """e_1 -> e_2 -> ... -> e_dim -> 0 as a matrix acting from the left."""
    m = Matrix.zeros(field, dim, dim)
    for h in range(dim - 1):
        m.rows[h + 1][h] = field.one
    return m


def test_fitting_split_identity():
    split = fitting_split(Matrix.identity(QQ, 3))
    assert split.exponent == 0
    assert split.kernel_basis == []
    assert len(split.image_basis) == 3


def test_fitting_split_nilpotent():
    split = fitting_split(shift_matrix(QQ, 2))
    assert split.exponent == 2
    assert split.image_basis == []
    assert len(split.kernel_basis) == 2


def test_fitting_split_diagonal():
    a = Matrix.from_rows(QQ, [[F(2), F(0)], [F(0), F(0)]])
    split = fitting_split(a)
    assert split.exponent == 1
    assert split.image_basis == [[F(2), F(0)]]
    assert split.kernel_basis == [[F(0), F(1)]]


def test_fitting_parts_are_invariant():
    for field in (QQ, F5):
        for a in suite_matrices(40, field, seed=5):
            split = fitting_split(a)
            dim = a.nrows
            for basis in (split.image_basis, split.kernel_basis):
                if not basis:
                    continue
                span = matrix_from_columns(field, basis, dim)
                for vec in basis:
                    assert solve(span, a.apply(vec)) is not None
            joint = RankTracker(field, dim)
            count = sum(joint.add(v) for v in split.image_basis + split.kernel_basis)
            assert count == dim


def test_basic_chains_examples():
    assert [c.length for c in basic_chains(Matrix.zeros(QQ, 3, 3))] == [1, 1, 1]
    assert [c.length for c in basic_chains(shift_matrix(QQ, 3))] == [3]
    mixed = Matrix.from_rows(
        QQ, [[F(0), F(0), F(0)], [F(1), F(0), F(0)], [F(0), F(0), F(0)]]
    )
    assert sorted(c.length for c in basic_chains(mixed)) == [1, 2]


def test_basic_chains_structure():
    a = shift_matrix(QQ, 4)
    (chain,) = basic_chains(a)
    for first, second in zip(chain.vectors, chain.vectors[1:]):
        assert a.apply(first) == second
    assert a.apply(chain.vectors[-1]) == [F(0)] * 4


def test_basic_chains_requires_nilpotent():
    with pytest.raises(ValueError):
        basic_chains(Matrix.identity(QQ, 2))


def test_chain_counts_match_filtration():
    for field in (QQ, F5):
        for a in suite_matrices(40, field, seed=6):
            split = fitting_split(a)
            if not split.kernel_basis:
                continue
            ker = matrix_from_columns(field, split.kernel_basis, a.nrows)
            cols = []
            for vec in split.kernel_basis:
                coords = solve(ker, a.apply(vec))
                assert coords is not None
                cols.append(coords)
            nilpotent = matrix_from_columns(field, cols, len(split.kernel_basis))
            chains = basic_chains(nilpotent)
            # chains of length > t, counted with multiplicity, recover the
            # kernel filtration dims: #chains of length >= t+1 = dim(ker A & im A^t)
            from fim.linalg import intersection_dim, null_space_basis

            dim = nilpotent.nrows
            kernel = null_space_basis(nilpotent)
            for t in range(0, dim + 1):
                power = nilpotent**t
                expected = intersection_dim(field, power.columns(), kernel, dim)
                assert sum(1 for c in chains if c.length >= t + 1) == expected


def test_strong_inner_inverse_examples():
    nil2 = shift_matrix(QQ, 2)
    assert strong_inner_inverse(nil2) == Matrix.from_rows(QQ, [[F(0), F(1)], [F(0), F(0)]])
    diag = Matrix.from_rows(QQ, [[F(2), F(0)], [F(0), F(0)]])
    assert strong_inner_inverse(diag) == Matrix.from_rows(QQ, [[F(1, 2), F(0)], [F(0), F(0)]])
    invertible = Matrix.from_rows(QQ, [[F(1), F(2)], [F(3), F(5)]])
    assert strong_inner_inverse(invertible) == inverse(invertible)
    empty = Matrix(QQ, [])
    assert strong_inner_inverse(empty).nrows == 0


def test_verify_strong_failure_witness():
    nil2 = shift_matrix(QQ, 2)
    report = verify_strong(nil2, Matrix.zeros(QQ, 2, 2), 3)
    assert not report.ok
    assert report.witness == (1, 1)


def test_conjugate_of_inverse_still_verifies():
    a = shift_matrix(QQ, 3)
    y = strong_inner_inverse(a)
    t = Matrix.identity(QQ, 3) + a
    conj = inverse(t) * y * t
    assert conj != y
    assert verify_strong(a, conj, 8).ok


@pytest.mark.parametrize("field", [QQ, F5])
def test_random_suite_small(field):
    for a in suite_matrices(60, field, seed=11):
        y = strong_inner_inverse(a)
        assert inner_inverse_properties_hold(a, y, a.nrows + 5)


def test_relations_keep_holding_past_the_dimension():
    # once the family holds up to dim+1 it holds for all j; spot-check far out
    for a in suite_matrices(16, QQ, seed=12):
        y = strong_inner_inverse(a)
        assert verify_strong(a, y, a.nrows + 9).ok


def test_rectangular_and_mixed_rejected():
    with pytest.raises(ValueError):
        fitting_split(Matrix.zeros(QQ, 2, 3))
    with pytest.raises(ValueError):
        verify_strong(Matrix.identity(QQ, 2), Matrix.identity(F5, 2), 2)
