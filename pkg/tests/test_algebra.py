"""Ring arithmetic and the distinguished elements of the monoid algebra."""

import pytest

from fim.algebra import (
    AlgebraElement,
    degree_split,
    ell,
    gen_x,
    gen_y,
    monomial,
    one,
    p_n,
    parse_element,
    rr,
    xpow,
    y_prime,
    ypow,
    zero,
)
from fim.fields import QQ, PrimeField
from fim.monoid import CanonicalMonomial, ParseError

F5 = PrimeField(5)
FIELDS = [QQ, F5]


def lz(field, i):
    return ell(field, i) if i >= 1 else zero(field)


def rz(field, i):
    return rr(field, i) if i >= 1 else zero(field)


@pytest.mark.parametrize("field", FIELDS)
def test_monomial_product(field):
    assert gen_x(field) * gen_y(field) == monomial(field, CanonicalMonomial(1, 1, 0))


@pytest.mark.parametrize("field", FIELDS)
def test_ell_rr_formulas(field):
    assert ell(field, 1) == one(field) - gen_x(field) * gen_y(field)
    assert rr(field, 1) == one(field) - gen_y(field) * gen_x(field)
    assert ell(field, 2) == gen_x(field) * gen_y(field) - xpow(field, 2) * ypow(field, 2)
    with pytest.raises(ValueError):
        ell(field, 0)
    with pytest.raises(ValueError):
        rr(field, 0)


@pytest.mark.parametrize("field", FIELDS)
def test_ell_one_is_idempotent(field):
    e = one(field) - gen_x(field) * gen_y(field)
    assert e * e == e


@pytest.mark.parametrize("field", FIELDS)
def test_double_counting_element(field):
    # xy + yx - 1 - xyyx collapses to -(l_1 r_1)
    x, y = gen_x(field), gen_y(field)
    combo = x * y + y * x - one(field) - x * y * y * x
    assert combo == zero(field) - ell(field, 1) * rr(field, 1)


@pytest.mark.parametrize("field", FIELDS)
def test_shift_identities(field):
    x, y = gen_x(field), gen_y(field)
    for i in range(1, 7):
        assert lz(field, i) * x == x * lz(field, i - 1)
        assert rz(field, i - 1) * x == x * rz(field, i)
        assert lz(field, i - 1) * y == y * lz(field, i)
        assert rz(field, i) * y == y * rz(field, i - 1)


@pytest.mark.parametrize("field", FIELDS)
def test_annihilation_identities(field):
    for i in range(1, 7):
        assert xpow(field, i) * rr(field, i) == zero(field)
        assert ypow(field, i) * ell(field, i) == zero(field)


@pytest.mark.parametrize("field", FIELDS)
def test_projection_orthogonality(field):
    for i in range(1, 6):
        for j in range(1, 6):
            li, lj = ell(field, i), ell(field, j)
            ri, rj = rr(field, i), rr(field, j)
            assert li * lj == (li if i == j else zero(field))
            assert ri * rj == (ri if i == j else zero(field))
            assert li * rj == rj * li


@pytest.mark.parametrize("field", FIELDS)
def test_p_n_central_idempotents(field):
    x, y = gen_x(field), gen_y(field)
    ps = {n: p_n(field, n) for n in range(1, 7)}
    assert ps[1] == rr(field, 1) * ell(field, 1)
    for n, p in ps.items():
        assert p * p == p
        assert p * x == x * p
        assert p * y == y * p
    for n in ps:
        for m in ps:
            if n != m:
                assert ps[n] * ps[m] == zero(field)
    with pytest.raises(ValueError):
        p_n(field, 0)


@pytest.mark.parametrize("field", FIELDS)
def test_degree_split(field):
    x, y = gen_x(field), gen_y(field)
    parts = degree_split(x + y)
    assert parts == {1: x, -1: y}
    assert degree_split(ell(field, 2)) == {0: ell(field, 2)}
    assert degree_split(x * ell(field, 1)) == {1: x * ell(field, 1)}
    # the parts sum back and multiplication adds degrees
    a = x * x + y - ell(field, 3)
    assert sum(degree_split(a).values(), zero(field)) == a
    b = x - y * y
    for d1, part1 in degree_split(a).items():
        for d2, part2 in degree_split(b).items():
            product = part1 * part2
            if not product.is_zero():
                assert set(degree_split(product)) == {d1 + d2}


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_y_prime_acts_like_y_in_balanced_products(field, m):
    x = gen_x(field)
    yp = y_prime(field, m)
    for i in range(0, 7):
        assert yp**i * xpow(field, i) == ypow(field, i) * xpow(field, i)
        assert xpow(field, i) * yp**i == xpow(field, i) * ypow(field, i)
    assert x * yp * x == x
    assert yp != yp * x * yp
    assert yp**m * p_n(field, m) == p_n(field, m)
    assert ypow(field, m) * p_n(field, m) == zero(field)


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("m", [2, 3])
def test_y_prime_generates_y_back(field, m):
    x, y = gen_x(field), gen_y(field)
    yp = y_prime(field, m)
    inner = yp ** (m - 1) * xpow(field, m - 1) - yp**m * xpow(field, m)
    assert y == yp - xpow(field, m - 1) * (one(field) - x * yp) * inner


@pytest.mark.parametrize("field", FIELDS)
def test_y_prime_satisfies_weak_system(field):
    x, y = gen_x(field), gen_y(field)
    yp = y_prime(field, 2)
    for n in range(1, 6):
        assert xpow(field, n - 1) * yp**n * xpow(field, n) == y * xpow(field, n)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        gen_x(QQ) + gen_x(F5)
    with pytest.raises(ValueError):
        gen_x(QQ) * gen_x(F5)


def test_scalar_multiplication():
    a = gen_x(QQ)
    assert 2 * a == a + a
    assert QQ.parse("1/2") * (a + a) == a
    assert 0 * a == zero(QQ)


def test_parse_and_print_round_trip():
    text = "3/2*(1,2,2) - (0,0,0) + 2*(0,1,0)"
    a = parse_element(text, QQ)
    assert parse_element(str(a), QQ) == a
    assert str(zero(QQ)) == "0"
    assert parse_element("(0,1,2)", QQ) == monomial(QQ, CanonicalMonomial(1, 2, 2))
    assert parse_element("5", QQ) == 5 * one(QQ)
    assert parse_element("-1", F5) == 4 * one(F5)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError):
        parse_element("3*(1,2", QQ)
    with pytest.raises(ParseError) as info:
        parse_element("2*(1,1,1) $ 3", QQ)
    assert info.value.position == 10


def test_term_order_in_str():
    a = parse_element("(2,2,0) + (0,1,0) + (0,0,0)", QQ)
    assert str(a) == "(0,0,0) + (0,1,0) + (2,2,0)"
