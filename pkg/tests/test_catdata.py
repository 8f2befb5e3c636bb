import pytest

from bcdcat import catdata as cd
from bcdcat.catdata import VanishingDenominatorError
from bcdcat.partitions import Partition
from bcdcat.series import Composite, make_spec

from conftest import ALL_SERIES, spec_id, specs

P = Partition


def test_empty_and_loop(c11):
    assert cd.qdim_general(c11, P(())) == 1
    for spec in specs():
        s, a = spec.s_value, spec.alpha_value
        assert cd.qdim_general(spec, P((1,))) == (a - a.inv()) / (s - s.inv()) + 1
    assert cd.qdim_general(c11, P((1,))) == -1


@pytest.mark.parametrize("spec", specs(["C"], 4, 4), ids=spec_id)
def test_column_beyond_n_vanishes(spec):
    assert cd.qdim_general(spec, P([1] * (spec.n + 1))).is_zero()


def test_specialized_c11(c11):
    assert cd.qdim_specialized(c11, P((1,))) == -1
    assert cd.qdim_specialized(c11, P((2,))) == 0


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_b_column_generator(n, k):
    spec = make_spec("Bneg", n, k)
    col = P([1] * (2 * n + 1))
    assert cd.qdim_general(spec, col) == 1
    assert cd.qdim_column(spec, 2 * n + 1) == 1
    assert cd.twist(spec, col) == 1


def test_row_column_small(c11):
    assert cd.qdim_column(c11, 0) == 1
    assert cd.qdim_row(c11, 0) == 1
    assert cd.qdim_column(c11, 1) == cd.qdim_general(c11, P((1,)))
    assert cd.qdim_row(c11, 1) == cd.qdim_general(c11, P((1,)))


def test_twists(c11):
    assert cd.twist(c11, P(())) == 1
    for spec in specs():
        assert cd.twist(spec, P((1,))) == spec.alpha_value


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (2, 3)])
def test_bneg_row_braiding(n, k):
    spec = make_spec("Bneg", n, k)
    assert cd.braiding_coeff(spec, P((2 * k + 1,)), P((2 * k,)), "remove") == 1


def test_add_row_braiding(c12):
    s = c12.s_value
    lam = P((1,))
    assert cd.braiding_coeff(c12, lam, P((2,)), "add") == s ** 2
    assert cd.braiding_coeff(c12, P(()), lam, "add") == 1


def test_branching_examples(c11, c12):
    got = {(e.mu, e.negligible) for e in cd.branching(c11, P(()))}
    assert got == {(P((1,)), False)}
    got = {(e.mu, e.negligible) for e in cd.branching(c11, P((1,)))}
    assert got == {(P((2,)), True), (P((1, 1)), True), (P(()), False)}
    got = {(e.mu, e.negligible) for e in cd.branching(c12, P((1,)))}
    assert got == {(P((2,)), False), (P((1, 1)), True), (P(()), False)}


@pytest.mark.parametrize("spec", specs(), ids=spec_id)
def test_specialized_agrees(spec):
    for lam in spec.labels.gamma:
        assert cd.qdim_specialized_any(spec, lam) == cd.qdim_general(spec, lam)


@pytest.mark.parametrize("spec", specs(), ids=spec_id)
def test_vanishing_boundary(spec):
    for lam in spec.labels.gamma:
        assert not cd.qdim_general(spec, lam).is_zero()
    for lam in spec.labels.boundary():
        assert cd.qdim_general(spec, lam).is_zero()


@pytest.mark.parametrize("spec", specs(), ids=spec_id)
def test_primed_agrees(spec):
    compared = 0
    for lam in spec.labels.gamma:
        try:
            v = cd.qdim_primed(spec, lam)
        except VanishingDenominatorError:
            continue
        compared += 1
        assert v == cd.qdim_general(spec, lam)
    assert compared > 0


def _names(spec):
    out = set()
    for t in cd.transparent_objects(spec):
        out.add(t.name if isinstance(t, Composite) else str(t))
    return out


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3)])
def test_transparent_lists(n, k):
    assert _names(make_spec("C", n, k)) == {"()"}
    assert _names(make_spec("Bneg", n, k)) == {"()", str(P([1] * (2 * n + 1))), f"({2 * k + 1})",
                                               f"1^{2 * n + 1}x({2 * k + 1})"}
    assert _names(make_spec("D", n, k)) == {"()", f"({2 * k})", str(P([1] * (2 * n))), f"1^{2 * n}x({2 * k})"}
    assert cd.transparent_group_type(make_spec("C", n, k)) == "1"
    assert cd.transparent_group_type(make_spec("CB", n, k)) == "Z2"
    assert cd.transparent_group_type(make_spec("D", n, k)) == "Z2xZ2"


def test_verdicts():
    got = {ser: cd.modularizability(make_spec(ser, 2, 2)).verdict for ser in ALL_SERIES}
    assert got == {"C": "modular", "CB": "modularizable", "BD": "modularizable", "D": "modularizable",
                   "Bneg": "not_modularizable", "BDneg": "not_modularizable", "CBneg": "not_modularizable"}


def test_cbneg_witness():
    v = cd.modularizability(make_spec("CBneg", 1, 2))
    (label, d, t), = v.witnesses
    assert label == P((5,)) and d == 1 and t == -1
