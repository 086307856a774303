from fractions import Fraction

import pytest

import minklen

SQUARE = [[2, 0], [3, 2], [1, 3], [0, 1]]
DOUBLED = [[2, 0], [10, 2], [8, 10], [0, 8]]


def test_lengths():
    assert minklen.minkowski_length(SQUARE) == 3
    assert minklen.minkowski_length(SQUARE, n=1) == 2
    assert minklen.lattice_diameter([[0, 0], [3, 1], [1, 3]]) == 2


def test_rational_length():
    assert minklen.rational_length(SQUARE) == (Fraction(10, 3), True)
    value, certified = minklen.rational_length(DOUBLED)
    assert certified
    assert value - minklen.minkowski_length(DOUBLED) == Fraction(8, 5)


def test_invariants_report():
    r = minklen.invariants(SQUARE)
    assert r["schema_version"] == 1
    assert r["normalized_volume"] == "5"
    assert r["lattice_width"]["width"] == 3
    assert r["lambda"] == "10/3"
    assert r["period"]["value"] == 3
    assert minklen.fraction(r["gap"]) == Fraction(1, 3)


def test_table_fit():
    r = minklen.table(SQUARE, t_max=9)
    assert [row["value"] for row in r["table"]] == [3, 6, 10, 13, 16, 20, 23, 26, 30]
    assert r["fit"]["constants"] == [0, 3, 6]


def test_verify_and_search():
    assert minklen.verify_paper()["all_pass"]
    a = minklen.search("gap", seed=5, budget=6, threads=1)
    b = minklen.search("gap", seed=5, budget=6, threads=4)
    assert a == b
    assert Fraction(a["supremum"]) >= Fraction(8, 5)


def test_bad_input():
    with pytest.raises(ValueError):
        minklen.minkowski_length([[0, 0], [1]])
    with pytest.raises(ValueError):
        minklen.search("nonsense")
