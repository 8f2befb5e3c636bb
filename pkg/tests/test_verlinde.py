import pytest

from bcdcat.cyclotomic import cyc_rational
from bcdcat.modularize import modular_table
from bcdcat.partitions import Partition
from bcdcat.series import ConsistencyError, make_spec
from bcdcat.verlinde import (ZeroDimensionError, generic_D_symbolic, level_rank_check, to_integer,
                             verlinde_BD, verlinde_C, verlinde_CB, verlinde_D, verlinde_D_symbolic,
                             verlinde_from_table, verlinde_generic)


def test_c12_closed_form():
    assert [verlinde_C(1, 2, g) for g in range(7)] == [2 ** (g - 1) * (1 + 2 ** g) if g else 1 for g in range(7)]
    assert [verlinde_C(1, 2, g) for g in range(7)] == [1, 3, 10, 36, 136, 528, 2080]


def test_c11():
    assert [verlinde_C(1, 1, g) for g in range(6)] == [1, 2, 4, 8, 16, 32]


def test_generic_small():
    dims = [cyc_rational(12, 1), cyc_rational(12, -1)]
    assert verlinde_generic(dims, 3) == 8
    assert verlinde_generic(dims, 1) == 2
    assert verlinde_generic(dims, 0) == 1
    with pytest.raises(ZeroDimensionError):
        verlinde_generic([cyc_rational(12, 0)], 2)


def test_genus_one_counts_labels():
    assert verlinde_CB(1, 1, 1) == 2
    assert verlinde_CB(1, 1, 0) == 1
    for n, k in [(1, 2), (2, 2), (2, 3)]:
        assert verlinde_BD(n, k, 1) == len(modular_table(make_spec("BD", n, k)).labels)
        assert verlinde_BD(n, k, 0) == 1


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2)])
@pytest.mark.parametrize("m", [1, 4])
def test_d_genus_one_and_zero(n, k, m):
    table = modular_table(make_spec("D", n, k), default_m=m)
    assert verlinde_D(n, k, 1, default_m=m) == len(table.labels)
    assert verlinde_D(n, k, 0, default_m=m) == 1


@pytest.mark.parametrize("series,n,k", [("C", 1, 3), ("C", 2, 2), ("CB", 2, 2), ("BD", 1, 3), ("BD", 2, 2)])
@pytest.mark.parametrize("g", range(4))
def test_closed_equals_generic(series, n, k, g):
    closed = {"C": verlinde_C, "CB": verlinde_CB, "BD": verlinde_BD}[series](n, k, g)
    assert closed == verlinde_from_table(series, n, k, g)


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3)])
@pytest.mark.parametrize("g", range(4))
def test_d_symbolic_matches_generic(n, k, g):
    assert verlinde_D_symbolic(n, k, g) == generic_D_symbolic(n, k, g)


@pytest.mark.parametrize("n,k", [(1, 2), (2, 3), (1, 4)])
def test_level_rank_c(n, k):
    assert all(r.equal for r in level_rank_check("C", n, k, 5))


def test_level_rank_d():
    assert all(r.equal for r in level_rank_check("D", 2, 3, 3))


def test_to_integer_rejects():
    with pytest.raises(ConsistencyError):
        to_integer(cyc_rational(12, -1))
    with pytest.raises(ConsistencyError):
        to_integer(cyc_rational(12, 1) / 2)


def test_d_missing_choice():
    with pytest.raises(ValueError):
        verlinde_D(2, 2, 2)
