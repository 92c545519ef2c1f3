"""The word oracle: rewriting closures against the bicyclic embedding."""

import pytest

from fim.congruence import (
    FAMILIES,
    FEW1,
    FEW2,
    MANY,
    all_words,
    classes_by_embedding,
    classes_by_rewriting,
    compare,
    count_canonical_triples,
    count_representable,
    fold_bicyclic,
    relation_pairs,
)
from fim.monoid import reduce_word


def test_all_words_enumeration():
    words = all_words(2)
    assert words == ["", "x", "y", "xx", "xy", "yx", "yy"]
    assert len(all_words(9)) == 2**10 - 1  # 1022 nonempty words plus the empty one


def test_fold_matches_reduction():
    for word in all_words(6):
        other = reduce_word(word)
        assert fold_bicyclic(word) == fold_bicyclic(other.word())


def test_embedding_classes_at_length_one():
    table = classes_by_embedding(1)
    assert table.class_count == 3
    assert sorted(table.classes()) == ["", "x", "y"]


def test_known_identifications():
    assert classes_by_embedding(3).same_class("xyx", "x")
    assert classes_by_rewriting(3, FEW1).same_class("xyx", "x")
    assert classes_by_rewriting(5, FEW2).same_class("xxyyx", "xxy")
    assert classes_by_rewriting(3, MANY).same_class("yxy", "y")
    # the two spellings of one element merge in every family
    for family in FAMILIES:
        assert classes_by_rewriting(6, family).same_class("xyyxx", "yxx")


def test_relation_pairs_shapes():
    few1 = relation_pairs(FEW1, 7)
    assert ("xyx", "x") in few1
    assert ("yxy", "y") in few1  # the mirror relation at j = 1
    many = relation_pairs(MANY, 5)
    assert ("xyx", "x") in many  # (1,1,1)
    assert all(lhs != rhs for lhs, rhs in many)
    for lhs, rhs in many:
        assert fold_bicyclic(lhs) == fold_bicyclic(rhs)


def test_rewriting_refines_embedding():
    emb = classes_by_embedding(5)
    for family in FAMILIES:
        table = classes_by_rewriting(5, family)
        for w1 in all_words(5):
            w2 = table.leader_of[w1]
            assert emb.same_class(w1, w2)


@pytest.mark.parametrize("bound", range(0, 8))
def test_partitions_agree_at_desk_scale(bound):
    report = compare(bound)
    assert report.equal, report.summary_lines()


def test_class_count_formula():
    # the classes of words of length <= L are the elements whose shorter
    # spelling fits in L letters; frozen values from the embedding oracle
    expected = {0: 1, 1: 3, 2: 7, 3: 13, 4: 22, 5: 34, 6: 50, 7: 70, 8: 95, 9: 125}
    for bound, value in expected.items():
        assert count_representable(bound) == value
    assert classes_by_embedding(6).class_count == 50
    # the naive canonical-word-length count is a different, smaller number
    assert count_canonical_triples(9) == 84


def test_compare_report_shape():
    report = compare(4)
    assert report.class_counts == {FEW1: 22, FEW2: 22, MANY: 22}
    assert report.witnesses == {FEW1: None, FEW2: None, MANY: None}
    assert any("equal" in line for line in report.summary_lines())


def test_insufficient_slack_is_reported_with_witness():
    # slack 2 is too tight for the FEW families at length 6: the two
    # six-letter spellings of x^2 y^3 x only connect through longer words
    table = classes_by_rewriting(6, FEW1, slack=2)
    emb = classes_by_embedding(6)
    assert table.class_count == 51
    assert emb.same_class("xxyyyx", "yxxxyy")
    assert not table.same_class("xxyyyx", "yxxxyy")


def test_bound_is_capped():
    with pytest.raises(ValueError):
        classes_by_embedding(11)
    with pytest.raises(ValueError):
        classes_by_rewriting(11, FEW1)
    with pytest.raises(ValueError):
        classes_by_rewriting(3, "nonsense")
