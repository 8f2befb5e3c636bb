import pytest

from bcdcat import catdata as cd
from bcdcat.cyclotomic import cyc_root
from bcdcat.partitions import Partition
from bcdcat.series import make_spec
from bcdcat.smatrix import (branching_slice_check, build_smatrix, character_point,
                            character_point_exponents, fusion_from_S, killing_check,
                            omega_closed_form, ribbon_check, sp_character)

from conftest import spec_id, specs

P = Partition


def test_character_points(c11):
    s = c11.s_value
    assert character_point(c11, P(())) == [s ** 2]
    assert character_point(c11, P((1,))) == [s ** 4]
    assert character_point_exponents(make_spec("C", 2, 1), P(())) == [4, 2]


def test_characters(c11):
    s = c11.s_value
    assert sp_character(P(()), [s ** 2]) == 1
    assert sp_character(P((1,)), [s ** 2]) == 1
    assert sp_character(P((1,)), [s ** 4]) == -1


def test_c11_smatrix(c11):
    sm = build_smatrix(c11)
    assert list(sm.labels) == [P(()), P((1,))]
    assert [[sm.S[i][j] for j in range(2)] for i in range(2)] == [[1, -1], [-1, -1]]
    assert sm.omega == 2
    assert killing_check(sm, P((1,))) == 0
    fus = fusion_from_S(sm)
    assert fus.N(P((1,)), P((1,)), P(())) == 1
    assert fus.N(P((1,)), P((1,)), P((1,))) == 0


@pytest.mark.parametrize("spec", specs(["C"], 5, 5, total=6), ids=spec_id)
def test_modularity(spec):
    sm = build_smatrix(spec)
    size = len(sm.labels)
    for i in range(size):
        assert sm.S[i][0] == cd.qdim_general(spec, sm.labels[i])
        for j in range(size):
            assert sm.S[i][j] == sm.S[j][i]
            acc = sum((sm.S[i][m] * sm.Sbar[m][j] for m in range(size)), start=sm.S[0][0] * 0)
            assert acc == (sm.omega if i == j else 0)
    assert sm.omega == omega_closed_form(spec)


@pytest.mark.parametrize("spec", specs(["C"], 4, 4, total=5), ids=spec_id)
def test_killing(spec):
    sm = build_smatrix(spec)
    for mu in sm.labels:
        assert killing_check(sm, mu) == (sm.omega if mu.size == 0 else 0)


@pytest.mark.parametrize("spec", specs(["C"], 4, 4, total=5), ids=spec_id)
def test_fusion(spec):
    sm = build_smatrix(spec)
    fus = fusion_from_S(sm)
    dims = [cd.qdim_general(spec, lam) for lam in sm.labels]
    assert fus.check(dims) == []
    assert ribbon_check(sm, fus)
    assert branching_slice_check(sm, fus)
    for a, b, c, v in fus.records():
        assert v > 0


def test_s_requires_c():
    with pytest.raises(ValueError):
        build_smatrix(make_spec("CB", 1, 1))
