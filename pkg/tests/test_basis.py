"""Projection-basis terms, expansion, and exact coordinate conversion."""

import random

import pytest

from fim.algebra import AlgebraElement, ell, gen_x, gen_y, monomial, one, parse_element, rr, zero
from fim.basis import (
    ProjectionBasisTerm,
    expand_term,
    recombine,
    terms_with_parameters,
    to_projection_basis,
)
from fim.fields import QQ, PrimeField
from fim.monoid import CanonicalMonomial, enumerate_monomials

F5 = PrimeField(5)


def test_side_conditions():
    ProjectionBasisTerm(0)  # the term "1"
    ProjectionBasisTerm(-1, 0, 2)  # y l_2
    ProjectionBasisTerm(2, 0, 1)  # x^2 l_1 has no side condition
    ProjectionBasisTerm(-3, 4, 0)  # y^3 r_4 has no side condition
    ProjectionBasisTerm(1, 2, 3)  # x r_2 l_3
    with pytest.raises(ValueError):
        ProjectionBasisTerm(-2, 0, 2)  # y^2 l_2 needs l > 2
    with pytest.raises(ValueError):
        ProjectionBasisTerm(2, 2, 0)  # x^2 r_2 needs r > 2
    with pytest.raises(ValueError):
        ProjectionBasisTerm(-1, 3, 1)  # y r_3 l_1 needs l > 1
    with pytest.raises(ValueError):
        ProjectionBasisTerm(1, 1, 2)  # x r_1 l_2 needs r > 1


def test_term_str():
    assert str(ProjectionBasisTerm(0)) == "1"
    assert str(ProjectionBasisTerm(3)) == "x^3"
    assert str(ProjectionBasisTerm(-1)) == "y"
    assert str(ProjectionBasisTerm(0, 1, 1)) == "r1*l1"
    assert str(ProjectionBasisTerm(-2, 1, 3)) == "y^2*r1*l3"


def test_expand_examples():
    assert expand_term(QQ, ProjectionBasisTerm(0, 0, 1)) == ell(QQ, 1)
    r1l1 = expand_term(QQ, ProjectionBasisTerm(0, 1, 1))
    assert r1l1 == rr(QQ, 1) * ell(QQ, 1)
    assert r1l1 == parse_element("(0,0,0) - (0,1,1) - (1,1,0) + (1,2,1)", QQ)
    # x^2 l_1 = x^2 - x^3 y
    assert expand_term(QQ, ProjectionBasisTerm(2, 0, 1)) == parse_element(
        "(2,2,2) - (3,3,2)", QQ
    )


def test_terms_with_parameters_counts():
    terms = terms_with_parameters(1)
    assert {str(t) for t in terms} == {"1", "x", "y", "l1", "x*l1", "r1", "y*r1", "r1*l1"}
    # all terms are homogeneous of their prefix degree
    for t in terms_with_parameters(3):
        expanded = expand_term(QQ, t)
        degrees = {m.degree() for m in expanded.terms}
        assert degrees == {t.degree}


def test_coordinates_of_named_elements():
    x, y = gen_x(QQ), gen_y(QQ)
    assert to_projection_basis(x * y) == [
        (QQ.one, ProjectionBasisTerm(0)),
        (-QQ.one, ProjectionBasisTerm(0, 0, 1)),
    ]
    assert to_projection_basis(x) == [(QQ.one, ProjectionBasisTerm(1))]
    what = one(QQ) + monomial(QQ, CanonicalMonomial(1, 2, 1)) - x * y - y * x
    assert to_projection_basis(what) == [(QQ.one, ProjectionBasisTerm(0, 1, 1))]
    assert to_projection_basis(zero(QQ)) == []


@pytest.mark.parametrize("field", [QQ, F5])
def test_round_trip_on_random_elements(field):
    rng = random.Random(424242)
    monos = list(enumerate_monomials(max_j=4))
    for _ in range(60):
        items = [
            (rng.choice(monos), field.from_int(rng.randint(-5, 5)))
            for _ in range(rng.randint(1, 6))
        ]
        a = AlgebraElement.from_items(field, items)
        coords = to_projection_basis(a)
        assert recombine(field, coords) == a
        # uniqueness: converting the recombination gives the same list
        assert to_projection_basis(recombine(field, coords)) == coords


def test_basis_terms_expand_independently():
    # no nontrivial combination of small terms vanishes
    field = QQ
    terms = terms_with_parameters(2)
    total = zero(field)
    for n, t in enumerate(terms, start=1):
        total = total + expand_term(field, t).scale(field.from_int(n))
    coords = to_projection_basis(total)
    assert {str(t) for _, t in coords} == {str(t) for t in terms}
