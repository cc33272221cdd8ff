import pytest
from hypothesis import given
from hypothesis import strategies as st

from qstrata.root_system import (CartanType, InvalidRankError,
                                 build_root_system, inner, simple_reflection)

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4), ("D", 5),
    ("E", 6), ("E", 7), ("E", 8),
    ("F", 4), ("G", 2),
]

EXPECTED_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 5): 15,
    ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
    ("C", 2): 4, ("C", 3): 9, ("C", 4): 16,
    ("D", 3): 6, ("D", 4): 12, ("D", 5): 20,
    ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
    ("F", 4): 24, ("G", 2): 6,
}


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_root_counts(family, rank):
    rs = build_root_system(CartanType(family, rank))
    assert len(rs.positive_roots) == EXPECTED_COUNTS[(family, rank)]
    assert all(all(x >= 0 for x in beta) for beta in rs.positive_roots)


@pytest.mark.parametrize("family,rank,bad", [
    ("B", 1, True), ("D", 2, True), ("E", 5, True), ("E", 9, True),
    ("F", 3, True), ("G", 3, True), ("A", 0, True), ("H", 3, True),
])
def test_invalid_ranks_rejected(family, rank, bad):
    with pytest.raises(InvalidRankError):
        CartanType(family, rank)


def test_a2_data():
    rs = build_root_system(CartanType("A", 2))
    assert rs.cartan_matrix == ((2, -1), (-1, 2))
    assert rs.gram.rows == ((2, -1), (-1, 2))
    assert len(rs.positive_roots) == 3


def test_g2_data():
    rs = build_root_system(CartanType("G", 2))
    assert rs.cartan_matrix == ((2, -3), (-1, 2))
    assert rs.gram.rows == ((2, -3), (-3, 6))
    assert len(rs.positive_roots) == 6


def test_a1_data():
    rs = build_root_system(CartanType("A", 1))
    assert rs.positive_roots == ((1,),)
    assert rs.gram.rows == ((2,),)


def test_inner_a2():
    rs = build_root_system(CartanType("A", 2))
    assert inner(rs, (1, 0), (1, 0)) == 2
    assert inner(rs, (1, 0), (0, 1)) == -1
    assert inner(rs, (1, 1), (0, 1)) == 1


def test_inner_dimension_mismatch():
    rs = build_root_system(CartanType("A", 2))
    with pytest.raises(ValueError):
        inner(rs, (1, 0, 0), (1, 0))


def test_simple_reflection_a2():
    rs = build_root_system(CartanType("A", 2))
    assert simple_reflection(rs, 1, (1, 0)) == (-1, 0)
    assert simple_reflection(rs, 1, (0, 1)) == (1, 1)
    assert simple_reflection(rs, 2, (1, 1)) == (1, 0)


def test_reflection_index_out_of_range():
    rs = build_root_system(CartanType("A", 2))
    with pytest.raises(IndexError):
        simple_reflection(rs, 3, (1, 0))


@given(st.sampled_from(ALL_TYPES), st.data())
def test_reflection_involution_and_isometry(tr, data):
    rs = build_root_system(CartanType(*tr))
    n = rs.rank
    coord = st.integers(min_value=-3, max_value=3)
    v = tuple(data.draw(coord) for _ in range(n))
    w = tuple(data.draw(coord) for _ in range(n))
    i = data.draw(st.integers(1, n))
    assert simple_reflection(rs, i, simple_reflection(rs, i, v)) == v
    assert inner(rs, simple_reflection(rs, i, v),
                 simple_reflection(rs, i, w)) == inner(rs, v, w)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_gram_symmetric_and_cartan_diagonal(family, rank):
    rs = build_root_system(CartanType(family, rank))
    n = rs.rank
    for i in range(n):
        assert rs.cartan_matrix[i][i] == 2
        for j in range(n):
            assert rs.gram.rows[i][j] == rs.gram.rows[j][i]
            if i != j:
                assert rs.cartan_matrix[i][j] <= 0
