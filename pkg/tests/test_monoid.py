"""Canonical forms and arithmetic in the monoid of one generator."""

import itertools

import pytest

from fim.congruence import fold_bicyclic
from fim.monoid import (
    ONE,
    X,
    Y,
    BicyclicPair,
    CanonicalMonomial,
    ParseError,
    enumerate_monomials,
    from_exponents,
    parse_monomial,
    parse_word,
    reduce_word,
)


def all_words(max_len):
    yield ""
    for n in range(1, max_len + 1):
        for letters in itertools.product("xy", repeat=n):
            yield "".join(letters)


def test_constants():
    assert ONE == CanonicalMonomial(0, 0, 0)
    assert X == CanonicalMonomial(1, 1, 1)
    assert Y == CanonicalMonomial(0, 1, 0)


def test_from_exponents_examples():
    assert from_exponents(0, 0, 0) == ONE
    assert from_exponents(1, 1, 0) == CanonicalMonomial(1, 1, 0)
    # yx^2 normalizes: x y^2 x^2 = y x^2 read right to left at j = 2
    assert from_exponents(0, 1, 2) == CanonicalMonomial(1, 2, 2)


def test_constructor_rejects_bad_triples():
    with pytest.raises(ValueError):
        CanonicalMonomial(2, 1, 0)
    with pytest.raises(ValueError):
        CanonicalMonomial(0, 1, 2)
    with pytest.raises(ValueError):
        CanonicalMonomial(-1, 0, 0)
    with pytest.raises(TypeError):
        CanonicalMonomial(1, 1, True)
    with pytest.raises(ValueError):
        from_exponents(0, -1, 0)


def test_embed_examples():
    assert X.embed() == BicyclicPair(0, 1, 1, 0)
    assert Y.embed() == BicyclicPair(1, 0, 0, 1)
    assert ONE.embed() == BicyclicPair(0, 0, 0, 0)


def test_embed_balance():
    for m in enumerate_monomials(max_j=5):
        p = m.embed()
        assert p.a + p.c == p.b + p.d


def test_multiply_examples():
    assert X * Y == CanonicalMonomial(1, 1, 0)
    assert Y * X == CanonicalMonomial(0, 1, 1)
    assert X * CanonicalMonomial(0, 2, 2) == CanonicalMonomial(1, 2, 2)
    assert ONE * X == X and X * ONE == X


def test_reduce_word_examples():
    assert reduce_word("xyx") == X
    assert reduce_word("") == ONE
    assert reduce_word("xyyxx") == CanonicalMonomial(1, 2, 2)
    assert reduce_word("  X y Y\tx X ") == CanonicalMonomial(1, 2, 2)


def test_parse_word_rejects_bad_letters():
    with pytest.raises(ParseError) as info:
        parse_word("xyzx")
    assert info.value.position == 2


def test_parse_monomial():
    assert parse_monomial("(1,2,2)") == CanonicalMonomial(1, 2, 2)
    assert parse_monomial(" ( 0 , 1 , 2 ) ") == CanonicalMonomial(1, 2, 2)
    with pytest.raises(ParseError):
        parse_monomial("(1,2")
    with pytest.raises(ParseError):
        parse_monomial("(1,2,3) junk")


def test_star_examples():
    assert X.star() == Y
    assert reduce_word("xy").star() == reduce_word("xy")
    assert CanonicalMonomial(1, 2, 2).star() == CanonicalMonomial(0, 2, 1)


def test_degree_examples():
    assert X.degree() == 1
    assert Y.degree() == -1
    assert CanonicalMonomial(1, 2, 2).degree() == 1


def test_word_round_trip():
    for m in enumerate_monomials(max_j=4):
        assert reduce_word(m.word()) == m
    assert CanonicalMonomial(1, 2, 2).word() == "xyyxx"
    assert ONE.word() == ""


def test_is_idempotent_matches_exponent_rule():
    # i + k = j characterizes idempotents; verified, not assumed
    for m in enumerate_monomials(max_j=5):
        assert m.is_idempotent() == (m.i + m.k == m.j)
    assert reduce_word("xy").is_idempotent()
    assert not X.is_idempotent()


def test_normal_form_soundness_against_letter_fold():
    # two words reduce to the same triple iff their bicyclic folds agree
    by_triple = {}
    by_fold = {}
    for word in all_words(8):
        by_triple.setdefault(reduce_word(word), set()).add(word)
        by_fold.setdefault(fold_bicyclic(word), set()).add(word)
    assert set(map(frozenset, by_triple.values())) == set(map(frozenset, by_fold.values()))


def test_multiplication_associative_exhaustive():
    monos = list(enumerate_monomials(max_j=4))
    for a in monos:
        for b in monos:
            ab = a * b
            for c in monos:
                assert (ab) * c == a * (b * c)


def test_star_is_involutive_antihomomorphism():
    monos = list(enumerate_monomials(max_j=4))
    for a in monos:
        assert a.star().star() == a
        for b in monos:
            assert (a * b).star() == b.star() * a.star()


def test_inverse_monoid_law():
    for m in enumerate_monomials(max_j=5):
        s = m.star()
        assert m * s * m == m
        assert s * m * s == s


def test_idempotents_commute():
    idems = [m for m in enumerate_monomials(max_j=5) if m.is_idempotent()]
    for e in idems:
        for f in idems:
            assert e * f == f * e


def test_words_with_letter_surplus_absorb_idempotents():
    for word in all_words(7):
        xs = word.count("x")
        ys = word.count("y")
        m = reduce_word(word)
        if xs > ys:
            assert reduce_word(word + "yx") == m == reduce_word("xy" + word)
        elif ys > xs:
            assert reduce_word(word + "xy") == m == reduce_word("yx" + word)


def test_degree_is_a_homomorphism():
    monos = list(enumerate_monomials(max_j=4))
    for a in monos:
        for b in monos:
            assert (a * b).degree() == a.degree() + b.degree()


def test_reduction_never_lengthens():
    # the shorter of the two normal-form spellings fits in the input;
    # the x^i y^j x^k spelling alone need not ("x" has triple (1,1,1))
    for word in all_words(7):
        assert reduce_word(word).min_length() <= len(word)
    assert reduce_word("x").length() == 3


def test_str_form():
    assert str(CanonicalMonomial(1, 2, 2)) == "(1,2,2)"
    assert str(ONE) == "(0,0,0)"
