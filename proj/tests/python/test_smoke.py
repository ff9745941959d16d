"""Smoke tests for the python bindings."""

import math

import pytest

import combrank


def test_golden_permutation():
    assert combrank.unrank_permutation(7, 4) == [4, 2, 1, 3]
    assert combrank.rank_permutation([3, 2, 4, 1]) == 23
    assert combrank.serial_to_offset(32, 5) == [0, 2, 2, 1]
    assert combrank.offset_to_permutation([1, 0, 3]) == [3, 2, 4, 1]


def test_counts():
    assert combrank.count_permutations(4) == 24
    assert combrank.count_setpartitions(6) == 203
    assert combrank.count_compositions(7, 5) == 330
    assert combrank.count_ksubsets(4, 2) == 6
    assert combrank.count_subsets(3) == 8
    assert combrank.bell(5) == 52
    assert combrank.stirling2(5, 2) == 15


def test_big_integers_round_trip():
    n = 40
    total = combrank.count_permutations(n)
    assert total == math.factorial(n)
    last = combrank.unrank_permutation(total, n)
    assert sorted(last) == list(range(1, n + 1))
    assert combrank.rank_permutation(last) == total


def test_families_round_trip_small():
    for s in range(1, 53):
        blocks = combrank.unrank_setpartition(s, 5)
        assert combrank.rank_setpartition(blocks) == s
    for s in range(1, 33):
        mask = combrank.unrank_subset(s, 5)
        assert combrank.rank_subset(mask) == s
    for s in range(1, 7):
        sub = combrank.unrank_ksubset(s, 4, 2)
        assert combrank.rank_ksubset(sub, 4) == s
    for s in range(1, 331):
        parts = combrank.unrank_composition(s, 7, 5)
        assert combrank.rank_composition(parts) == s


def test_stylize():
    assert combrank.stylize([0, 1, 1, 0, 0]) == "(1, 4, 5)(2, 3)"
    assert combrank.unrank_setpartition(26, 5) == [0, 1, 1, 0, 0]


def test_d_matrix():
    rows = combrank.build_d_matrix(6)
    assert rows[0] == [203, 151, 77, 26, 6, 1]
    assert rows[5] == [1]


def test_generator():
    assert combrank.generate_ksubsets_lex(3, 2) == [[1, 2], [1, 3], [2, 3]]


def test_errors():
    with pytest.raises(IndexError):
        combrank.unrank_permutation(25, 4)
    with pytest.raises(ValueError):
        combrank.rank_permutation([1, 1])
    with pytest.raises(ValueError):
        combrank.stirling2(3, 4)
