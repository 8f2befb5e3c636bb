from math import comb

import pytest
from hypothesis import given, strategies as st

from bcdcat.partitions import (BoxConstraints, CellError, Partition, content, d_prime_stat, d_stat,
                               enumerate_box, hook_length, transpose)


@st.composite
def partitions(draw, max_rows=8, max_cols=8):
    rows = draw(st.lists(st.integers(min_value=0, max_value=max_cols), max_size=max_rows))
    return Partition(sorted(rows, reverse=True))


def box(n, k):
    return BoxConstraints(row1=k, col1=n)


def test_transpose_examples():
    assert transpose(Partition(())) == Partition(())
    assert transpose(Partition((3, 1))) == Partition((2, 1, 1))
    assert transpose(Partition((2, 2))) == Partition((2, 2))


def test_content_and_hooks():
    assert content(1, 1) == 0
    assert content(1, 3) == 2
    assert hook_length(Partition((1,)), 1, 1) == 1
    assert hook_length(Partition((2, 1)), 1, 1) == 3
    assert hook_length(Partition((2, 1)), 1, 2) == 1


def test_d_statistics():
    assert d_stat(Partition((2, 1)), 1, 2) == 1
    assert d_stat(Partition((2, 1)), 2, 1) == -1
    assert d_prime_stat(Partition((1,)), 1, 1) == -1


def test_cell_errors():
    with pytest.raises(CellError):
        hook_length(Partition((1,)), 1, 2)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_parse():
    assert Partition.parse("3,1") == Partition((3, 1))
    assert Partition.parse("1^3") == Partition((1, 1, 1))
    assert Partition.parse("") == Partition(())
    assert str(Partition((3, 1))) == "(3,1)"


def test_small_boxes():
    assert enumerate_box(box(1, 1)) == [Partition(()), Partition((1,))]
    assert enumerate_box(box(1, 2)) == [Partition(()), Partition((1,)), Partition((2,))]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_box_cardinality(n, k):
    assert len(enumerate_box(box(n, k))) == comb(n + k, n)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("k", range(1, 9))
def test_rectangle_content_sum(n, k):
    assert 2 * Partition([k] * n).content_sum() == n * k * (k - n)


@given(partitions())
def test_transpose_involution(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size == lam.size
    assert lam.transpose().content_sum() == -lam.content_sum()


@given(partitions())
def test_hook_sum_symmetry(lam):
    mu = lam.transpose()
    for i, j in lam.cells():
        assert hook_length(lam, i, j) == hook_length(mu, j, i)


@given(partitions())
def test_add_remove_inverse(lam):
    for i, _ in lam.addable():
        assert lam.add_cell(i).remove_cell(i) == lam
    for i, _ in lam.removable():
        assert lam.remove_cell(i).add_cell(i) == lam
